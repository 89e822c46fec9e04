"""Regenerate ``softcloud/data/lexicon.txt`` and ``irregular.tsv``.

Source: the ``infl_lu.csv.gz`` lemma/inflection table shipped inside the
lemminflect wheel (``pip download --no-deps lemminflect`` then unzip). Only
needed when refreshing the embedded data; the package never imports it.

    python scripts/build_lexicon.py path/to/infl_lu.csv.gz
"""

import argparse
import gzip
import re
import sys
from collections import defaultdict
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from softcloud.wordpipe import inflections  # noqa: E402

DATA = Path(__file__).resolve().parents[1] / "src" / "softcloud" / "data"
WORD = re.compile(r"^[a-z]{2,}$")

# Closed-class words are roots as written; without this "as" would become "a"
# and "its" would become "it".
FUNCTION_WORDS = """
a an the this that these those its it his her hers him he she we us our ours
you your yours they them their theirs me my mine i who whom whose which what
as at by for from in into of off on onto out over per to up upon via with
within without and or nor but if else then than so yet not no yes also
is are was were been being am be has had have does did do done
""".split()

# Forms that resolve to a base despite also being listed as lemmas.
FORCED = {
    "is": "be", "are": "be", "being": "be", "was": "be", "were": "be", "been": "be", "am": "be",
    "has": "have", "had": "have", "does": "do", "did": "do", "done": "do",
}


def load(path):
    table = defaultdict(lambda: defaultdict(set))
    with gzip.open(path, "rt", encoding="utf-8") as fh:
        for line in fh:
            lemma, pos, *forms = line.rstrip("\n").split(",")
            for group in forms:
                for form in group.split("/"):
                    if form:
                        table[lemma][pos].add(form)
    return table


def build(table):
    lemmas = {w for w in table if WORD.match(w)}
    inflected_from = defaultdict(set)
    for lemma in lemmas:
        for pos in ("noun", "verb"):
            for form in table[lemma].get(pos, ()):
                if form != lemma and WORD.match(form):
                    inflected_from[form].add((pos, lemma))

    # a lemma that is a regular inflection of another lemma is not a base
    # form ("parsing" is listed as a noun, "reserved" as an adjective)
    lexicon = {
        w for w in lemmas
        if not any(w in inflections(base) for _, base in inflected_from.get(w, ()))
    }
    lexicon.update(FUNCTION_WORDS)
    lexicon -= FORCED.keys()

    irregular = dict(FORCED)
    for form, sources in inflected_from.items():
        if form in lexicon or form in irregular:
            continue
        if any(form in inflections(base) for _, base in sources):
            continue
        # prefer verbs (thrown -> throw), then alphabetical
        _, base = min(sources, key=lambda s: (s[0] != "verb", s[1]))
        if base in lexicon:
            irregular[form] = base
    return sorted(lexicon), dict(sorted(irregular.items()))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("infl_lu")
    args = parser.parse_args()
    lexicon, irregular = build(load(args.infl_lu))
    header = "# generated by scripts/build_lexicon.py from lemminflect infl_lu.csv.gz\n"
    (DATA / "lexicon.txt").write_text(header + "\n".join(lexicon) + "\n", encoding="utf-8")
    (DATA / "irregular.tsv").write_text(
        header + "".join(f"{k}\t{v}\n" for k, v in irregular.items()), encoding="utf-8"
    )
    print(f"lexicon: {len(lexicon)} words, irregular: {len(irregular)} forms")


if __name__ == "__main__":
    main()
