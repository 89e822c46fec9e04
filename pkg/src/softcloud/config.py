"""Pipeline configuration: one flat ``key = value`` namespace.

The same keys are used by command-line flags (``--min-freq``), config files
(``min-freq = 2``) and :meth:`PipelineConfig.to_text`. Values resolve with
precedence flags > config file > ``SOFTCLOUD_SEED`` (seed only) > defaults.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

from .errors import ConfigError
from .ingest import ArtifactKind
from .layout import FontScale, SpiralParams
from .render import FORMATS, RenderConfig, hex_color, parse_color
from .tagmodel import FilterSpec, OrderMode, read_word_file

SEED_ENV = "SOFTCLOUD_SEED"
U64_MAX = 2**64 - 1

DEFAULTS = {
    "kind": "auto",
    "order": "alpha",
    "seed": "0",
    "min-freq": "1",
    "top": "",
    "max-letters": "",
    "stop-words": "",
    "stem-exceptions": "",
    "layout": "typewriter",
    "canvas": "800x600",
    "font-scale": "linear",
    "font-min": "10",
    "font-max": "72",
    "spiral-growth": "2",
    "spiral-step": "0.1",
    "palette-seed": "0",
    "show-counts": "false",
    "capitalize": "true",
    "background": "#ffffff",
    "font-family": "sans-serif",
    "format": "",
}

_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


def _int(key, value, lo=0, hi=None) -> int:
    try:
        n = int(value)
    except ValueError:
        raise ConfigError(f"{key}: expected an integer, got {value!r}") from None
    if n < lo or (hi is not None and n > hi):
        bound = f"between {lo} and {hi}" if hi is not None else f">= {lo}"
        raise ConfigError(f"{key}: must be {bound}, got {n}")
    return n


def _float(key, value) -> float:
    try:
        return float(value)
    except ValueError:
        raise ConfigError(f"{key}: expected a number, got {value!r}") from None


def _bool(key, value) -> bool:
    v = str(value).strip().lower()
    if v in _TRUE:
        return True
    if v in _FALSE:
        return False
    raise ConfigError(f"{key}: expected true or false, got {value!r}")


def parse_canvas(value: str) -> tuple[float, float]:
    try:
        w, h = (float(v) for v in value.lower().split("x"))
    except ValueError:
        raise ConfigError(f"canvas: expected WIDTHxHEIGHT, got {value!r}") from None
    if w <= 0 or h <= 0:
        raise ConfigError(f"canvas: dimensions must be positive, got {value!r}")
    return w, h


def read_config_file(path: str | Path) -> tuple[dict[str, str], list[str]]:
    """Parse ``key = value`` lines; repeated ``input`` keys collect paths."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"{path}: cannot read config file: {exc.strerror or exc}") from exc
    settings, inputs = {}, []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep:
            raise ConfigError(f"{path}:{lineno}: expected key = value")
        if key == "input":
            inputs.append(value)
        elif key in DEFAULTS:
            settings[key] = value
        else:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
    return settings, inputs


def resolve_settings(
    flags: Mapping[str, object] | None = None,
    file_settings: Mapping[str, str] | None = None,
    environ: Mapping[str, str] | None = None,
) -> dict[str, str]:
    environ = os.environ if environ is None else environ
    merged = dict(DEFAULTS)
    if environ.get(SEED_ENV):
        merged["seed"] = environ[SEED_ENV]
    merged.update(file_settings or {})
    for key, value in (flags or {}).items():
        if value is not None:
            merged[key] = str(value).lower() if isinstance(value, bool) else str(value)
    return merged


@dataclass(frozen=True)
class PipelineConfig:
    inputs: tuple[tuple[str, ArtifactKind | None], ...] = ()
    order: OrderMode = OrderMode()
    filters: FilterSpec = FilterSpec()
    layout: str = "typewriter"
    canvas: tuple[float, float] = (800.0, 600.0)
    scale: FontScale = FontScale()
    spiral: SpiralParams = SpiralParams()
    render: RenderConfig = RenderConfig()
    capitalize: bool = True
    seed: int = 0
    palette_seed: int = 0
    stop_words_path: str = ""
    stem_exceptions_path: str = ""
    kind: str = "auto"
    settings: dict = field(default_factory=dict, compare=False, repr=False)

    @classmethod
    def from_settings(cls, settings: Mapping[str, str], inputs=()) -> "PipelineConfig":
        s = {**DEFAULTS, **settings}
        unknown = set(s) - set(DEFAULTS)
        if unknown:
            raise ConfigError(f"unknown setting(s): {', '.join(sorted(unknown))}")
        kind = ArtifactKind.parse(s["kind"])
        seed = _int("seed", s["seed"], 0, U64_MAX)
        fmt = s["format"]
        if fmt and fmt not in FORMATS:
            raise ConfigError(f"format: expected one of {', '.join(FORMATS)}, got {fmt!r}")
        layout = s["layout"]
        if layout not in ("typewriter", "spiral"):
            raise ConfigError(f"layout: expected typewriter or spiral, got {layout!r}")
        stop_words = read_word_file(s["stop-words"]) if s["stop-words"] else frozenset()
        show_counts = _bool("show-counts", s["show-counts"])
        return cls(
            inputs=tuple((str(p), kind) for p in inputs),
            order=OrderMode(s["order"], seed),
            filters=FilterSpec(
                min_weight=_int("min-freq", s["min-freq"], 1),
                top_n=_int("top", s["top"]) if s["top"] else None,
                stop_words=stop_words,
                max_letters=_int("max-letters", s["max-letters"], 1) if s["max-letters"] else None,
            ),
            layout=layout,
            canvas=parse_canvas(s["canvas"]),
            scale=FontScale(s["font-scale"], _float("font-min", s["font-min"]), _float("font-max", s["font-max"])),
            spiral=SpiralParams(_float("spiral-growth", s["spiral-growth"]), _float("spiral-step", s["spiral-step"])),
            render=RenderConfig(
                background=parse_color(s["background"]),
                show_counts=show_counts,
                font_family=s["font-family"],
                output_format=fmt or "svg",
            ),
            capitalize=_bool("capitalize", s["capitalize"]),
            seed=seed,
            palette_seed=_int("palette-seed", s["palette-seed"], 0, U64_MAX),
            stop_words_path=s["stop-words"],
            stem_exceptions_path=s["stem-exceptions"],
            kind=s["kind"],
            settings=s,
        )

    def to_settings(self) -> dict[str, str]:
        """Canonical string form; ``from_settings`` of this is an equal config."""
        w, h = self.canvas
        return {
            "kind": self.kind,
            "order": {"alphabetical": "alpha", "frequency": "freq"}.get(self.order.kind, self.order.kind),
            "seed": str(self.seed),
            "min-freq": str(self.filters.min_weight),
            "top": "" if self.filters.top_n is None else str(self.filters.top_n),
            "max-letters": "" if self.filters.max_letters is None else str(self.filters.max_letters),
            "stop-words": self.stop_words_path,
            "stem-exceptions": self.stem_exceptions_path,
            "layout": self.layout,
            "canvas": f"{w:g}x{h:g}",
            "font-scale": self.scale.mode,
            "font-min": f"{self.scale.min_size:g}",
            "font-max": f"{self.scale.max_size:g}",
            "spiral-growth": f"{self.spiral.growth:g}",
            "spiral-step": f"{self.spiral.step:g}",
            "palette-seed": str(self.palette_seed),
            "show-counts": str(self.render.show_counts).lower(),
            "capitalize": str(self.capitalize).lower(),
            "background": hex_color(self.render.background),
            "font-family": self.render.font_family,
            "format": self.render.output_format,
        }

    def to_text(self) -> str:
        lines = [f"input = {path}" for path, _ in self.inputs]
        lines += [f"{k} = {v}" for k, v in self.to_settings().items()]
        return "\n".join(lines) + "\n"
