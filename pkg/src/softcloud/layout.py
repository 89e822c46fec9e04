"""Place ordered tags on a canvas: typewriter rows or an outward spiral.

Glyph metrics are a fixed model rather than real font measurements: a tag of
``n`` letters at size ``s`` is ``0.6 * s * n`` wide and ``1.2 * s`` tall.
Every box carries a padding gutter, and padded boxes never overlap each other
or leave the canvas. Coordinates are rounded to 2 decimals as they are placed,
so the renderer writes exactly the numbers the collision checks used.
"""

from __future__ import annotations

import dataclasses
import hashlib
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ConfigError, LayoutError
from .tagmodel import Tag

WIDTH_PER_LETTER = 0.6
HEIGHT_FACTOR = 1.2
PADDING = 1.0
# touching padded boxes count as colliding within this margin (float noise)
_EPS = 1e-6

# Dark enough for >= 4.5:1 contrast on white.
PALETTE = (
    (31, 73, 125),
    (178, 34, 34),
    (0, 100, 0),
    (106, 27, 154),
    (158, 72, 14),
    (0, 105, 120),
    (173, 20, 87),
    (66, 66, 66),
    (46, 64, 150),
    (121, 85, 0),
)


@dataclass(frozen=True)
class FontScale:
    mode: str = "linear"
    min_size: float = 10.0
    max_size: float = 72.0

    def __post_init__(self):
        if self.mode not in ("literal", "linear"):
            raise ConfigError(f"unknown font scale {self.mode!r}; expected literal or linear")
        if self.mode == "linear" and not 0 < self.min_size < self.max_size:
            raise ConfigError(f"font sizes need 0 < min < max, got {self.min_size}..{self.max_size}")


@dataclass(frozen=True)
class SpiralParams:
    """Archimedean spiral ``r = growth * theta`` sampled every ``step`` radians."""

    growth: float = 2.0
    step: float = 0.1


@dataclass(frozen=True)
class PlacedTag:
    text: str
    weight: int
    x: float
    y: float
    width: float
    height: float
    font_size: float
    color: tuple[int, int, int] = (0, 0, 0)


@dataclass(frozen=True)
class PlacedCloud:
    tags: tuple[PlacedTag, ...]
    canvas_width: float
    canvas_height: float
    mode: str


def font_size_for(weight: int, scale: FontScale, set_min: int, set_max: int) -> float:
    if scale.mode == "literal":
        return float(max(weight, 1))
    if set_max == set_min:
        return scale.max_size
    frac = (weight - set_min) / (set_max - set_min)
    return round(scale.min_size + frac * (scale.max_size - scale.min_size), 2)


def display_text(text: str, capitalize: bool = True) -> str:
    return text[:1].upper() + text[1:] if capitalize else text


def box_size(text: str, font_size: float) -> tuple[float, float]:
    return (
        round(WIDTH_PER_LETTER * font_size * len(text), 2),
        round(HEIGHT_FACTOR * font_size, 2),
    )


def count_label_width(weight: int, font_size: float) -> float:
    """Extra width for a weight printed at half size after one half-size space."""
    return round(WIDTH_PER_LETTER * font_size / 2 * (len(str(weight)) + 1), 2)


def _sized(tags: Sequence[Tag], scale: FontScale, capitalize: bool, show_counts: bool = False):
    if not tags:
        return []
    lo = min(t.weight for t in tags)
    hi = max(t.weight for t in tags)
    out = []
    for t in tags:
        size = font_size_for(t.weight, scale, lo, hi)
        w, h = box_size(t.text, size)
        if show_counts:
            w = round(w + count_label_width(t.weight, size), 2)
        out.append((t, display_text(t.text, capitalize), size, w, h))
    return out


def layout_typewriter(
    tags: Sequence[Tag],
    canvas_width: float,
    scale: FontScale = FontScale(),
    capitalize: bool = True,
    padding: float = PADDING,
    show_counts: bool = False,
) -> PlacedCloud:
    """Left to right, wrapping to a new row when the next tag does not fit.

    Rows are top-aligned, so sorting by (y, x) gives back the input order.
    The canvas grows downwards as rows are added.
    """
    placed = []
    cursor = row_top = row_height = 0.0
    for tag, text, size, w, h in _sized(tags, scale, capitalize, show_counts):
        pw, ph = w + 2 * padding, h + 2 * padding
        if pw > canvas_width:
            raise LayoutError(
                f"tag {text!r} needs width {pw:.2f} but the canvas is {canvas_width:.2f} wide"
            )
        if cursor and cursor + pw > canvas_width:
            row_top = round(row_top + row_height, 2)
            cursor = row_height = 0.0
        placed.append(
            PlacedTag(text, tag.weight, round(cursor + padding, 2), round(row_top + padding, 2), w, h, size)
        )
        cursor = round(cursor + pw, 2)
        row_height = max(row_height, ph)
    return PlacedCloud(tuple(placed), canvas_width, round(row_top + row_height, 2), "typewriter")


def _collides(xs, ys, w, h, boxes: np.ndarray) -> np.ndarray:
    """Mask of candidate top-left corners whose padded box hits a placed one."""
    if not len(boxes):
        return np.zeros(len(xs), dtype=bool)
    bx, by, bw, bh = boxes.T
    hit = (
        (xs[:, None] < bx + bw + _EPS)
        & (bx < xs[:, None] + w + _EPS)
        & (ys[:, None] < by + bh + _EPS)
        & (by < ys[:, None] + h + _EPS)
    )
    return hit.any(axis=1)


def layout_spiral(
    tags: Sequence[Tag],
    canvas_width: float,
    canvas_height: float,
    scale: FontScale = FontScale(),
    capitalize: bool = True,
    padding: float = PADDING,
    spiral: SpiralParams = SpiralParams(),
    show_counts: bool = False,
) -> PlacedCloud:
    """First tag centered; each later tag at the first free spiral point."""
    cx, cy = canvas_width / 2, canvas_height / 2
    # past this radius no point of the spiral can hold a box inside the canvas
    max_theta = math.hypot(canvas_width, canvas_height) / 2 / spiral.growth + 2 * math.pi
    thetas = np.arange(0.0, max_theta + spiral.step, spiral.step)
    dx = spiral.growth * thetas * np.cos(thetas)
    dy = spiral.growth * thetas * np.sin(thetas)

    boxes = np.empty((0, 4))  # padded x, y, w, h
    placed = []
    for tag, text, size, w, h in _sized(tags, scale, capitalize, show_counts):
        pw, ph = w + 2 * padding, h + 2 * padding
        if pw > canvas_width or ph > canvas_height:
            raise LayoutError(
                f"tag {text!r} ({pw:.2f}x{ph:.2f}) does not fit a "
                f"{canvas_width:g}x{canvas_height:g} canvas; use a larger --canvas"
            )
        # top-left of the padded box for every spiral point
        xs = np.round(cx + dx - w / 2, 2) - padding
        ys = np.round(cy + dy - h / 2, 2) - padding
        ok = (xs >= 0) & (ys >= 0) & (xs + pw <= canvas_width) & (ys + ph <= canvas_height)
        hit = None
        for start in range(0, len(xs), 512):
            sl = slice(start, start + 512)
            free = ok[sl] & ~_collides(xs[sl], ys[sl], pw, ph, boxes)
            if free.any():
                hit = start + int(np.argmax(free))
                break
        if hit is None:
            raise LayoutError(
                f"no free spot for tag {text!r} on a {canvas_width:g}x{canvas_height:g} "
                "canvas; use a larger --canvas or fewer tags (--top)"
            )
        x, y = float(xs[hit]), float(ys[hit])
        boxes = np.vstack([boxes, [x, y, pw, ph]])
        placed.append(PlacedTag(text, tag.weight, round(x + padding, 2), round(y + padding, 2), w, h, size))
    return PlacedCloud(tuple(placed), canvas_width, canvas_height, "spiral")


def color_for(text: str, palette_seed: int) -> tuple[int, int, int]:
    digest = hashlib.blake2b(f"{palette_seed}\x00{text.lower()}".encode(), digest_size=8).digest()
    return PALETTE[int.from_bytes(digest, "big") % len(PALETTE)]


def assign_colors(cloud: PlacedCloud, palette_seed: int = 0) -> PlacedCloud:
    """Decorative colors only; positions and sizes are left untouched."""
    tags = tuple(dataclasses.replace(t, color=color_for(t.text, palette_seed)) for t in cloud.tags)
    return dataclasses.replace(cloud, tags=tags)


def layout(tags, mode: str, canvas: tuple[float, float], scale: FontScale = FontScale(), **kw) -> PlacedCloud:
    if mode == "typewriter":
        return layout_typewriter(tags, canvas[0], scale, **kw)
    if mode == "spiral":
        return layout_spiral(tags, canvas[0], canvas[1], scale, **kw)
    raise ConfigError(f"unknown layout {mode!r}; expected typewriter or spiral")
