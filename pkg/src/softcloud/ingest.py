"""Mine the raw words of a software artifact.

Produces the "words file": every word occurrence in artifact order, exactly as
written (``org.mozilla.classfile`` and ``itsExceptionTableTop`` stay whole;
splitting happens later in :mod:`softcloud.wordpipe`).
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from html.parser import HTMLParser
from pathlib import Path
from typing import Iterable, Iterator

from .errors import ConfigError, IngestError


class ArtifactKind(str, enum.Enum):
    JAVA = "java-source"
    JAVADOC = "javadoc-html"
    TEXT = "plain-text"

    @classmethod
    def parse(cls, value: str) -> "ArtifactKind | None":
        """Accept a kind name or ``auto`` (returned as None)."""
        if value == "auto":
            return None
        aliases = {"java": cls.JAVA, "html": cls.JAVADOC, "javadoc": cls.JAVADOC, "text": cls.TEXT}
        try:
            return aliases.get(value) or cls(value)
        except ValueError:
            raise ConfigError(f"unknown artifact kind {value!r}") from None


@dataclass(frozen=True)
class RawWord:
    text: str
    source: ArtifactKind
    ordinal: int


@dataclass(frozen=True)
class WordList:
    words: tuple[RawWord, ...] = ()
    artifact_path: str = ""

    def __len__(self):
        return len(self.words)

    def __iter__(self) -> Iterator[RawWord]:
        return iter(self.words)

    def __getitem__(self, i):
        return self.words[i]

    @property
    def texts(self) -> list[str]:
        return [w.text for w in self.words]

    def __add__(self, other: "WordList") -> "WordList":
        offset = len(self.words)
        moved = tuple(RawWord(w.text, w.source, w.ordinal + offset) for w in other.words)
        path = ", ".join(p for p in (self.artifact_path, other.artifact_path) if p)
        return WordList(self.words + moved, path)

    @classmethod
    def build(cls, texts: Iterable[str], source: ArtifactKind, path: str = "") -> "WordList":
        return cls(tuple(RawWord(t, source, i) for i, t in enumerate(texts)), path)

    def dump(self) -> str:
        """One word per line, LF terminated."""
        return "".join(w.text + "\n" for w in self.words)


# -- java ---------------------------------------------------------------------

JAVA_KEYWORDS = frozenset("""
abstract assert boolean break byte case catch char class const continue default
do double else enum extends final finally float for goto if implements import
instanceof int interface long native new package private protected public
return short static strictfp super switch synchronized this throw throws
transient try void volatile while true false null
""".split())

_IDENT = r"[A-Za-z_$][\w$]*(?:\.[A-Za-z_$][\w$]*)*"
_IDENT_RE = re.compile(_IDENT)

_JAVA_TOKEN_RE = re.compile(
    r'(?P<textblock>"""[\s\S]*?(?:"""|\Z))'
    r'|(?P<string>"(?:\\.|[^"\\\n])*"?)'
    r"|(?P<char>'(?:\\.|[^'\\\n])*'?)"
    r"|(?P<comment>//[^\n]*|/\*[\s\S]*?(?:\*/|\Z))"
    r"|(?P<number>\.?\d[\w.]*)"
    rf"|(?P<ident>{_IDENT})"
)


def _java_words(source: str) -> Iterator[str]:
    for m in _JAVA_TOKEN_RE.finditer(source):
        kind = m.lastgroup
        if kind == "ident":
            yield m.group()
        elif kind == "comment":
            yield from _IDENT_RE.findall(m.group())


def extract_words_java(source: str, path: str = "") -> WordList:
    """Identifiers, dotted paths and comment words; no keywords or literals."""
    words = (w for w in _java_words(source) if w not in JAVA_KEYWORDS)
    return WordList.build(words, ArtifactKind.JAVA, path)


# -- javadoc html -------------------------------------------------------------

_HTML_WORD_RE = re.compile(r"[\w$]+(?:\.[\w$]+)*")


class _VisibleText(HTMLParser):
    HIDDEN = frozenset(("script", "style", "title", "noscript", "template"))

    def __init__(self):
        super().__init__(convert_charrefs=True)
        self.chunks: list[str] = []
        self._hidden = 0

    def handle_starttag(self, tag, attrs):
        if tag in self.HIDDEN:
            self._hidden += 1

    def handle_endtag(self, tag):
        if tag in self.HIDDEN and self._hidden:
            self._hidden -= 1

    def handle_data(self, data):
        if not self._hidden:
            self.chunks.append(data)


def extract_words_javadoc_html(html: str, path: str = "") -> WordList:
    if "\x00" in html:
        raise IngestError(f"{path or '<html>'}: binary content, not HTML")
    parser = _VisibleText()
    parser.feed(html)
    parser.close()
    words = (w for chunk in parser.chunks for w in _HTML_WORD_RE.findall(chunk))
    return WordList.build(words, ArtifactKind.JAVADOC, path)


# -- plain text ---------------------------------------------------------------

_TEXT_WORD_RE = re.compile(r"[^\W_]+(?:[._\-][^\W_]+)*")


def extract_words_text(text: str, path: str = "") -> WordList:
    return WordList.build(_TEXT_WORD_RE.findall(text), ArtifactKind.TEXT, path)


# -- dispatch -----------------------------------------------------------------

EXTRACTORS = {
    ArtifactKind.JAVA: extract_words_java,
    ArtifactKind.JAVADOC: extract_words_javadoc_html,
    ArtifactKind.TEXT: extract_words_text,
}

TEXT_SUFFIXES = frozenset(("", ".txt", ".text", ".md", ".markdown", ".rst", ".adoc", ".tex", ".csv"))


def infer_kind(path: str | Path) -> ArtifactKind:
    suffix = Path(path).suffix.lower()
    if suffix == ".java":
        return ArtifactKind.JAVA
    if suffix in (".html", ".htm"):
        return ArtifactKind.JAVADOC
    if suffix in TEXT_SUFFIXES:
        return ArtifactKind.TEXT
    raise ConfigError(f"{path}: cannot infer artifact kind from extension {suffix!r}; pass --kind")


def read_artifact(path: str | Path) -> str:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise IngestError(f"{path}: {exc.strerror or exc}") from exc
    return data.decode("utf-8", errors="replace")


def ingest(path: str | Path, kind: ArtifactKind | None = None) -> WordList:
    """Read one artifact; ``kind=None`` infers it from the extension."""
    if kind is None:
        kind = infer_kind(path)
    return EXTRACTORS[kind](read_artifact(path), str(path))


def ingest_all(inputs: Iterable[tuple[str | Path, ArtifactKind | None]]) -> WordList:
    """Ingest several artifacts and concatenate them in argument order."""
    total = WordList()
    for path, kind in inputs:
        total = total + ingest(path, kind)
    return total
