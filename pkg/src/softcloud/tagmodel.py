"""Weighted tags: counting, ordering and filtering."""

from __future__ import annotations

import random
from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .errors import ConfigError, IngestError


@dataclass(frozen=True, order=True)
class Tag:
    text: str
    weight: int


class TagSet(Mapping):
    """Immutable multiset of roots: text -> weight (all weights >= 1)."""

    def __init__(self, weights: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        items = dict(weights)
        for text, weight in items.items():
            if not text or weight < 1:
                raise ValueError(f"invalid tag {text!r} with weight {weight}")
        self._weights = items

    def __getitem__(self, text: str) -> int:
        return self._weights[text]

    def __iter__(self) -> Iterator[str]:
        return iter(self._weights)

    def __len__(self) -> int:
        return len(self._weights)

    def __repr__(self):
        return f"TagSet({dict(sorted(self._weights.items()))!r})"

    @property
    def total(self) -> int:
        return sum(self._weights.values())

    @property
    def distinct(self) -> int:
        return len(self._weights)

    def tags(self) -> list[Tag]:
        return [Tag(t, w) for t, w in self._weights.items()]


def count_tags(roots: Iterable[str]) -> TagSet:
    return TagSet(Counter(roots))


@dataclass(frozen=True)
class OrderMode:
    kind: str = "alphabetical"
    seed: int = 0

    KINDS = ("alphabetical", "frequency", "random")
    _ALIASES = {"alpha": "alphabetical", "freq": "frequency"}

    def __post_init__(self):
        kind = self._ALIASES.get(self.kind, self.kind)
        if kind not in self.KINDS:
            raise ConfigError(f"unknown order {self.kind!r}; expected alpha, freq or random")
        object.__setattr__(self, "kind", kind)

    @property
    def label(self) -> str:
        return f"random({self.seed})" if self.kind == "random" else self.kind


def frequency_key(tag: Tag):
    return (-tag.weight, tag.text)


def order_tags(tagset: TagSet, mode: OrderMode) -> list[Tag]:
    """Alphabetical, frequency (ties alphabetical), or seeded random order."""
    tags = sorted(tagset.tags(), key=lambda t: t.text)
    if mode.kind == "frequency":
        tags.sort(key=frequency_key)
    elif mode.kind == "random":
        random.Random(mode.seed).shuffle(tags)
    return tags


@dataclass(frozen=True)
class FilterSpec:
    min_weight: int = 1
    top_n: int | None = None
    stop_words: frozenset[str] = field(default_factory=frozenset)
    max_letters: int | None = None

    def __post_init__(self):
        if self.min_weight < 1:
            raise ConfigError(f"min-freq must be >= 1, got {self.min_weight}")
        if self.top_n is not None and self.top_n < 0:
            raise ConfigError(f"top must be >= 0, got {self.top_n}")
        if self.max_letters is not None and self.max_letters < 1:
            raise ConfigError(f"max-letters must be >= 1, got {self.max_letters}")
        object.__setattr__(self, "stop_words", frozenset(w.lower() for w in self.stop_words))


def apply_filters(tagset: TagSet, spec: FilterSpec) -> TagSet:
    """Stop-words, then min weight, then top-n, then truncation.

    Truncated tags that collide are merged and their weights summed.
    """
    kept = [t for t in tagset.tags() if t.text not in spec.stop_words and t.weight >= spec.min_weight]
    if spec.top_n is not None:
        kept = sorted(kept, key=frequency_key)[: spec.top_n]
    if spec.max_letters is None:
        return TagSet((t.text, t.weight) for t in kept)
    merged: Counter[str] = Counter()
    for t in kept:
        merged[t.text[: spec.max_letters]] += t.weight
    return TagSet(merged)


def read_word_file(path) -> frozenset[str]:
    """One word per line; blank lines and ``#`` comments ignored."""
    try:
        lines = Path(path).read_text(encoding="utf-8", errors="replace").splitlines()
    except OSError as exc:
        raise IngestError(f"{path}: {exc.strerror or exc}") from exc
    return frozenset(s.strip().lower() for s in lines if s.strip() and not s.startswith("#"))
