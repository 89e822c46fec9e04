"""Check a cloud's tag frequencies against an independent recount.

For each tag the recount gives the *relevant* frequency, the cloud gives the
*retrieved* frequency, and their agreement is the *correctly retrieved*
frequency. Precision, recall and F-measure follow from those three numbers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from statistics import fmean

from .errors import UndefinedMetricError
from .tagmodel import TagSet
from .wordpipe import Lemmatizer, default_lemmatizer


@dataclass(frozen=True)
class TagJudgment:
    tag: str
    relevant: int
    retrieved: int
    correct: int | None = None  # defaults to min(relevant, retrieved)

    def __post_init__(self):
        if self.relevant < 0 or self.retrieved < 0:
            raise ValueError(f"{self.tag}: frequencies must be >= 0")
        if self.correct is None:
            object.__setattr__(self, "correct", min(self.relevant, self.retrieved))
        if not 0 <= self.correct <= min(self.relevant, self.retrieved):
            raise ValueError(
                f"{self.tag}: correct={self.correct} exceeds relevant={self.relevant} "
                f"or retrieved={self.retrieved}"
            )


def precision(j: TagJudgment) -> float:
    if j.retrieved == 0:
        raise UndefinedMetricError(f"precision of {j.tag!r} is undefined: nothing retrieved")
    return j.correct / j.retrieved


def recall(j: TagJudgment) -> float:
    if j.relevant == 0:
        raise UndefinedMetricError(f"recall of {j.tag!r} is undefined: tag not in artifact")
    return j.correct / j.relevant


def f_measure(p: float, r: float) -> float:
    """Harmonic mean; 0 when both inputs are 0."""
    if p + r == 0:
        return 0.0
    return 2 * (p * r) / (p + r)


def _metric(fn, j):
    try:
        return fn(j)
    except UndefinedMetricError:
        return None


@dataclass(frozen=True)
class TagMetrics:
    tag: str
    relevant: int
    correct: int
    retrieved: int
    precision: float | None
    recall: float | None
    f_measure: float | None

    @classmethod
    def from_judgment(cls, j: TagJudgment) -> "TagMetrics":
        p, r = _metric(precision, j), _metric(recall, j)
        f = f_measure(p, r) if p is not None and r is not None else None
        return cls(j.tag, j.relevant, j.correct, j.retrieved, p, r, f)

    @property
    def values(self):
        return (self.precision, self.recall, self.f_measure)

    @property
    def perfect(self) -> bool:
        return all(v == 1 for v in self.values)


def _fmt(v: float | None) -> str:
    return "N/A" if v is None else f"{v:.1f}"


@dataclass
class MetricsReport:
    rows: list[TagMetrics] = field(default_factory=list)

    @property
    def failures(self) -> list[TagMetrics]:
        """Tags with any metric below 1 or undefined."""
        return [r for r in self.rows if not r.perfect]

    @property
    def perfect(self) -> bool:
        return not self.failures

    def mean(self, name: str) -> float | None:
        vals = [getattr(r, name) for r in self.rows if getattr(r, name) is not None]
        return fmean(vals) if vals else None

    def to_text(self, limit: int | None = None) -> str:
        """Table at one decimal, failing tags first."""
        shown = self.failures + [r for r in self.rows if r.perfect]
        if limit is not None:
            shown = shown[:limit]
        width = max([len("tag")] + [len(r.tag) for r in shown])
        out = [f"{'tag':<{width}}  relevant  correct  retrieved  precision  recall  f-measure"]
        for r in shown:
            out.append(
                f"{r.tag:<{width}}  {r.relevant:>8}  {r.correct:>7}  {r.retrieved:>9}  "
                f"{_fmt(r.precision):>9}  {_fmt(r.recall):>6}  {_fmt(r.f_measure):>9}"
            )
        out.append(
            f"{len(self.rows)} tags, {len(self.failures)} below 1; mean precision "
            f"{_fmt(self.mean('precision'))}, recall {_fmt(self.mean('recall'))}, "
            f"f-measure {_fmt(self.mean('f_measure'))}"
        )
        return "\n".join(out) + "\n"

    def to_json(self) -> bytes:
        doc = {
            "tags": [
                {
                    "tag": r.tag,
                    "relevant": r.relevant,
                    "correct": r.correct,
                    "retrieved": r.retrieved,
                    "precision": r.precision,
                    "recall": r.recall,
                    "f_measure": r.f_measure,
                }
                for r in self.rows
            ],
            "mean": {k: self.mean(k) for k in ("precision", "recall", "f_measure")},
            "perfect": self.perfect,
        }
        return (json.dumps(doc, indent=2) + "\n").encode("utf-8")


# -- oracle -------------------------------------------------------------------
#
# Deliberately written without the regex splitter or Counter-based tally used
# by the main pipeline: a character scan and a plain dict.


def _scan_fragments(word: str) -> list[str]:
    frags = []
    current = ""
    for i, c in enumerate(word):
        if "a" <= c <= "z":
            current += c
        elif "A" <= c <= "Z":
            if current:
                frags.append(current)
            nxt = word[i + 1] if i + 1 < len(word) else ""
            if "a" <= nxt <= "z":
                current = c.lower()
            else:
                frags.append(c.lower())
                current = ""
        else:
            if current:
                frags.append(current)
            current = ""
    if current:
        frags.append(current)
    return frags


def oracle_counts(words, lemmatizer: Lemmatizer | None = None) -> dict[str, int]:
    lem = lemmatizer or default_lemmatizer()
    counts: dict[str, int] = {}
    for w in words:
        for frag in _scan_fragments(getattr(w, "text", w)):
            root = lem.stem(frag)
            counts[root] = counts.get(root, 0) + 1
    return counts


def judge(relevant: dict[str, int], retrieved) -> list[TagJudgment]:
    tags = sorted(set(relevant) | set(retrieved))
    return [TagJudgment(t, relevant.get(t, 0), retrieved.get(t, 0)) for t in tags]


def evaluate_cloud(artifact, tagset: TagSet, lemmatizer: Lemmatizer | None = None) -> MetricsReport:
    """Judge every tag found by either the recount or the cloud."""
    relevant = oracle_counts(artifact, lemmatizer)
    return MetricsReport([TagMetrics.from_judgment(j) for j in judge(relevant, tagset)])
