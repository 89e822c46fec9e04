"""Serialize clouds to SVG and HTML, and tag sets to a JSON frequency report.

All output is deterministic: fixed attribute order, two-decimal coordinates,
LF newlines, no timestamps.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from xml.sax.saxutils import escape, quoteattr

from .errors import ConfigError
from .layout import WIDTH_PER_LETTER, PlacedCloud
from .tagmodel import OrderMode, TagSet, order_tags

# baseline sits one font size below the box top; the rest of the 1.2 box is descent
ASCENT_FACTOR = 1.0
FORMATS = ("svg", "html", "json")


@dataclass(frozen=True)
class RenderConfig:
    background: tuple[int, int, int] = (255, 255, 255)
    show_counts: bool = False
    font_family: str = "sans-serif"
    output_format: str = "svg"

    def __post_init__(self):
        if self.output_format not in FORMATS:
            raise ConfigError(f"unknown format {self.output_format!r}; expected svg, html or json")


def hex_color(rgb) -> str:
    return "#{:02x}{:02x}{:02x}".format(*rgb)


def parse_color(value: str) -> tuple[int, int, int]:
    """``#rrggbb`` or ``r,g,b`` -> RGB triple."""
    value = value.strip()
    try:
        if value.startswith("#") and len(value) == 7:
            rgb = tuple(int(value[i : i + 2], 16) for i in (1, 3, 5))
        else:
            rgb = tuple(int(v) for v in value.split(","))
    except ValueError:
        rgb = ()
    if len(rgb) != 3 or not all(0 <= c <= 255 for c in rgb):
        raise ConfigError(f"bad color {value!r}; expected #rrggbb or r,g,b")
    return rgb


def _num(v: float) -> str:
    return f"{v:.2f}"


def render_svg(cloud: PlacedCloud, cfg: RenderConfig = RenderConfig()) -> bytes:
    w, h = _num(cloud.canvas_width), _num(cloud.canvas_height)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        f'  <rect x="0.00" y="0.00" width="{w}" height="{h}" fill="{hex_color(cfg.background)}"/>',
    ]
    family = quoteattr(cfg.font_family)
    for t in cloud.tags:
        body = escape(t.text)
        if cfg.show_counts:
            half = t.font_size / 2
            body += (
                f'<tspan font-size="{_num(half)}" dx="{_num(WIDTH_PER_LETTER * half)}">'
                f"{t.weight}</tspan>"
            )
        lines.append(
            f'  <text x="{_num(t.x)}" y="{_num(t.y + ASCENT_FACTOR * t.font_size)}" '
            f'font-family={family} font-size="{_num(t.font_size)}" fill="{hex_color(t.color)}" '
            f'data-weight="{t.weight}">{body}</text>'
        )
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode("utf-8")


def render_html(cloud: PlacedCloud, cfg: RenderConfig = RenderConfig(), title: str = "Tag cloud") -> bytes:
    """Single self-contained page with the SVG inline."""
    head = (
        "<!DOCTYPE html>\n"
        '<html lang="en">\n'
        "<head>\n"
        '<meta charset="utf-8"/>\n'
        f"<title>{escape(title)}</title>\n"
        "</head>\n"
        "<body>\n"
        '<div class="cloud">\n'
    ).encode("utf-8")
    tail = b"</div>\n</body>\n</html>\n"
    return head + render_svg(cloud, cfg) + tail


def export_json(tagset: TagSet, order: OrderMode) -> bytes:
    rows = [
        {"tag": t.text, "weight": t.weight, "rank": i}
        for i, t in enumerate(order_tags(tagset, order), 1)
    ]
    return (json.dumps(rows, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def load_json(data: bytes | str) -> TagSet:
    """Inverse of :func:`export_json` (rank is ignored)."""
    try:
        rows = json.loads(data)
        return TagSet((str(r["tag"]), int(r["weight"])) for r in rows)
    except (ValueError, TypeError, KeyError) as exc:
        raise ConfigError(f"not a tag frequency report: {exc}") from exc


def render(cloud: PlacedCloud, tagset: TagSet, order: OrderMode, cfg: RenderConfig) -> bytes:
    if cfg.output_format == "svg":
        return render_svg(cloud, cfg)
    if cfg.output_format == "html":
        return render_html(cloud, cfg)
    return export_json(tagset, order)
