import random
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"
JAVADOC_TXT = FIXTURES / "xmlparseexception_javadoc.txt"

VOCAB = [
    "get", "set", "parse", "parsing", "parsed", "line", "number", "stack", "trace",
    "exception", "interfaces", "reserved", "thrown", "occurred", "name", "value",
    "index", "indices", "children", "node", "tree", "buffer", "size", "count",
    "synchronized", "arguments", "parameters", "extends", "class", "method", "field",
    "table", "top", "load", "constant", "empty", "string", "wait", "notify", "xml",
]
SEPARATORS = ["", "", "", "_", ".", "$"]


def random_identifier(rng: random.Random) -> str:
    parts = [rng.choice(VOCAB) for _ in range(rng.randint(1, 4))]
    out = parts[0] if rng.random() < 0.7 else parts[0].upper()
    for p in parts[1:]:
        sep = rng.choice(SEPARATORS)
        piece = p.upper() if rng.random() < 0.1 else p.capitalize()
        out += sep + piece
    if rng.random() < 0.15:
        out += str(rng.randint(0, 64))
    return out


def synthetic_words(seed: int, n: int | None = None) -> list[str]:
    rng = random.Random(seed)
    n = n if n is not None else rng.randint(100, 5000)
    return [random_identifier(rng) for _ in range(n)]


def synthetic_artifact(seed: int, n: int | None = None) -> tuple[str, str]:
    """(suffix, text) of a random artifact in one of the three kinds."""
    rng = random.Random(seed)
    words = synthetic_words(seed, n)
    kind = rng.choice(["java", "text", "html"])
    if kind == "java":
        body = "\n".join(f"    private int {w}; // {rng.choice(VOCAB)} value" for w in words)
        return ".java", f"class Holder {{\n{body}\n}}\n"
    if kind == "html":
        body = "\n".join(f"<li><code>{w}</code></li>" for w in words)
        return ".html", f"<html><body><script>var x=1;</script><ul>\n{body}\n</ul></body></html>\n"
    return ".txt", " ".join(words) + "\n"


@pytest.fixture
def javadoc_text():
    return JAVADOC_TXT.read_text(encoding="utf-8")


# -- acceptance summary ---------------------------------------------------------

_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[-1]
        _ACCEPTANCE[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_ACCEPTANCE.items()):
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{mark}  {name}")
