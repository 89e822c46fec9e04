"""Turn raw artifact words into root words.

Two steps: camel-case splitting cuts an identifier such as ``getLineNr`` into
lowercase fragments (``get``, ``line``, ``nr``), then each fragment is reduced
to its root (``parsing`` -> ``parse``). Roots come from an embedded base-form
lexicon plus a table of irregular forms; a fragment that cannot be resolved is
its own root.
"""

from __future__ import annotations

import functools
import re
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping

# One uppercase letter may lead a lowercase run; any other uppercase letter
# stands alone. Applied only to runs of ASCII letters.
_FRAGMENT_RE = re.compile(r"[A-Z]?[a-z]+|[A-Z]")
_LETTER_RUN_RE = re.compile(r"[A-Za-z]+")

VOWELS = frozenset("aeiou")
_NO_DOUBLE = frozenset("aeiouwxy")
_SIBILANT_ENDINGS = ("s", "x", "z", "ch", "sh")


def split_word(word: str) -> list[str]:
    """Split a raw word on case changes, separators and digits.

    >>> split_word("NanoXML")
    ['nano', 'x', 'm', 'l']
    >>> split_word("putInt16")
    ['put', 'int']
    >>> split_word("XMLParseException")
    ['x', 'm', 'l', 'parse', 'exception']
    """
    fragments = []
    for run in _LETTER_RUN_RE.findall(word):
        fragments.extend(m.lower() for m in _FRAGMENT_RE.findall(run))
    return fragments


# -- forward inflection -----------------------------------------------------
#
# The lemmatizer works backwards: it proposes a base for a suffixed word and
# accepts it only if inflecting that base forwards reproduces the word. These
# helpers are the forward direction.


def _vowel_groups(word: str) -> int:
    return len(re.findall(r"[aeiouy]+", word[1:])) + (word[0] in VOWELS)


def _ends_cvc(word: str) -> bool:
    """True for bases ending consonant-vowel-consonant (``stop``, ``occur``)."""
    if len(word) < 2 or word[-1] in _NO_DOUBLE or word[-2] not in VOWELS:
        return False
    if len(word) == 2:
        return True
    before = word[-3]
    return before not in VOWELS or (before == "u" and word[-4:-3] == "q")


def _doubling(word: str) -> tuple[bool, ...]:
    """Which spellings (undoubled, doubled) are allowed before -ed/-ing."""
    if not _ends_cvc(word):
        return (False,)
    if _vowel_groups(word) <= 1:
        return (True,)
    # stress decides for longer words (visited, occurred); allow both
    return (False, True)


def _with_vowel_suffix(word: str, suffix: str) -> set[str]:
    if word.endswith("ie") and suffix == "ing":
        return {word[:-2] + "ying"}
    if word.endswith("e") and len(word) > 2 and word[-2] not in "eoy":
        return {word[:-1] + suffix}
    if word.endswith("e") and suffix == "ed":
        return {word + "d"}
    if suffix == "ed" and len(word) > 1 and word[-1] == "y" and word[-2] not in VOWELS:
        return {word[:-1] + "ied"}
    return {word + word[-1] + suffix if double else word + suffix for double in _doubling(word)}


def inflections(base: str) -> set[str]:
    """Regular plural / third-person, past, and progressive forms of ``base``."""
    forms = set()
    if base.endswith(_SIBILANT_ENDINGS):
        forms.add(base + "es")
    elif len(base) > 1 and base[-1] == "y" and base[-2] not in VOWELS:
        forms.add(base[:-1] + "ies")
    elif base.endswith("o"):
        forms.update((base + "s", base + "es"))
    else:
        forms.add(base + "s")
    forms |= _with_vowel_suffix(base, "ed")
    forms |= _with_vowel_suffix(base, "ing")
    return forms


def _candidates(word: str) -> list[str]:
    """Possible bases for ``word`` in preference order."""
    out = []
    if word.endswith("ies"):
        out += [word[:-3] + "y", word[:-1]]
    elif word.endswith("es"):
        out += [word[:-1], word[:-2]]
    elif word.endswith("s") and not word.endswith("ss"):
        out.append(word[:-1])
    if word.endswith("ied"):
        out.append(word[:-3] + "y")
    elif word.endswith("ed"):
        stem = word[:-2]
        out += [word[:-1], stem]
        if len(stem) > 2 and stem[-1] == stem[-2]:
            out.append(stem[:-1])
    if word.endswith("ying"):
        out.append(word[:-4] + "ie")
    if word.endswith("ing"):
        stem = word[:-3]
        out += [stem, stem + "e"]
        if len(stem) > 2 and stem[-1] == stem[-2]:
            out.append(stem[:-1])
    return [c for c in out if len(c) >= 2]


# -- lemmatizer -------------------------------------------------------------


def _read_lines(name: str) -> list[str]:
    text = resources.files("softcloud.data").joinpath(name).read_text(encoding="utf-8")
    return [line for line in text.splitlines() if line and not line.startswith("#")]


@functools.lru_cache(maxsize=None)
def _embedded_lexicon() -> frozenset[str]:
    return frozenset(_read_lines("lexicon.txt"))


@functools.lru_cache(maxsize=None)
def _embedded_irregular() -> dict[str, str]:
    return dict(line.split("\t") for line in _read_lines("irregular.tsv"))


def read_exceptions(path: str | Path) -> dict[str, str]:
    """Read a ``word<TAB>root`` file; later lines win."""
    table = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not all(parts):
            from .errors import ConfigError

            raise ConfigError(f"{path}:{lineno}: expected 'word<TAB>root', got {line!r}")
        table[parts[0].lower()] = parts[1].lower()
    return table


class Lemmatizer:
    """Reduces lowercase fragments to their roots.

    Lookup order: irregular table, then the word itself if it is already a
    base form, then suffix rules whose candidate base must be in the lexicon
    and must re-inflect to the input. Anything unresolved is returned as-is.
    """

    def __init__(self, exceptions: Mapping[str, str] | None = None):
        self.irregular = dict(_embedded_irregular())
        if exceptions:
            self.irregular.update(exceptions)
        self.lexicon = _embedded_lexicon() | frozenset(self.irregular.values())
        self._cache: dict[str, str] = {}

    def stem(self, word: str) -> str:
        root = self._cache.get(word)
        if root is None:
            root = self._cache[word] = self._resolve(word)
        return root

    def _resolve(self, word: str) -> str:
        if word in self.irregular:
            return self.irregular[word]
        if word in self.lexicon:
            return word
        for base in _candidates(word):
            if base in self.lexicon and word in inflections(base):
                return base
        return word

    def pipeline(self, words: Iterable[str]) -> list[str]:
        return [self.stem(f) for w in words for f in split_word(w)]


@functools.lru_cache(maxsize=None)
def default_lemmatizer() -> Lemmatizer:
    return Lemmatizer()


def stem_word(fragment: str) -> str:
    """Root of a lowercase fragment using the embedded tables."""
    return default_lemmatizer().stem(fragment)


def pipeline(words, lemmatizer: Lemmatizer | None = None) -> list[str]:
    """Split and stem every word, keeping artifact order.

    ``words`` may hold raw strings or objects with a ``text`` attribute
    (a :class:`~softcloud.ingest.WordList` works directly).
    """
    lem = lemmatizer or default_lemmatizer()
    return lem.pipeline(getattr(w, "text", w) for w in words)
