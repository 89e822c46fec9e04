"""``softcloud`` command: ``generate`` (default) and ``eval``.

Exit codes: 0 ok, 1 unreadable input, 2 bad configuration or usage,
3 layout failure, 4 evaluation found tags whose metrics are not all 1.
"""

from __future__ import annotations

import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

import click

from .config import PipelineConfig, read_config_file, resolve_settings
from .errors import ConfigError, IngestError, SoftCloudError
from .evaluation import MetricsReport, evaluate_cloud
from .ingest import WordList, ingest, ingest_all
from .layout import PlacedCloud, assign_colors, layout
from .render import load_json, render
from .tagmodel import TagSet, apply_filters, count_tags, order_tags
from .wordpipe import Lemmatizer, default_lemmatizer, pipeline, read_exceptions

EXIT_EVAL_MISMATCH = 4
SUFFIX_FORMATS = {".svg": "svg", ".html": "html", ".htm": "html", ".json": "json"}


@dataclass
class Result:
    words: WordList
    counts: TagSet
    tagset: TagSet
    cloud: PlacedCloud
    output: bytes


def lemmatizer_for(cfg: PipelineConfig) -> Lemmatizer:
    if cfg.stem_exceptions_path:
        return Lemmatizer(read_exceptions(cfg.stem_exceptions_path))
    return default_lemmatizer()


def build(cfg: PipelineConfig, words: WordList | None = None) -> Result:
    """Run every stage after ingestion and render the configured format."""
    if words is None:
        words = ingest_all(cfg.inputs)
    counts = count_tags(pipeline(words, lemmatizer_for(cfg)))
    tagset = apply_filters(counts, cfg.filters)
    ordered = order_tags(tagset, cfg.order)
    kw = {"capitalize": cfg.capitalize, "show_counts": cfg.render.show_counts}
    if cfg.layout == "spiral":
        kw["spiral"] = cfg.spiral
    cloud = assign_colors(layout(ordered, cfg.layout, cfg.canvas, cfg.scale, **kw), cfg.palette_seed)
    return Result(words, counts, tagset, cloud, render(cloud, tagset, cfg.order, cfg.render))


def write_output(data: bytes, out: str):
    if out == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return
    try:
        Path(out).write_bytes(data)
    except OSError as exc:
        raise IngestError(f"{out}: {exc.strerror or exc}") from exc


# -- click plumbing -----------------------------------------------------------


class DefaultGroup(click.Group):
    """Treat ``softcloud <paths>`` as ``softcloud generate <paths>``."""

    def parse_args(self, ctx, args):
        if args and args[0] not in self.commands and args[0] not in ("--help", "-h", "--version"):
            args = ["generate", *args]
        return super().parse_args(ctx, args)


PIPELINE_OPTIONS = [
    click.option("--config", "config_path", type=click.Path(dir_okay=False), help="key = value config file."),
    click.option("--kind", help="Artifact kind: auto, java-source, javadoc-html, plain-text."),
    click.option("--order", help="alpha, freq or random."),
    click.option("--seed", help="Seed for random order (default $SOFTCLOUD_SEED or 0)."),
    click.option("--min-freq", help="Drop tags with fewer occurrences."),
    click.option("--top", help="Keep only the N most frequent tags."),
    click.option("--max-letters", help="Truncate tag text to N letters."),
    click.option("--stop-words", help="File with one word per line to drop."),
    click.option("--stem-exceptions", help="word<TAB>root file overriding irregular forms."),
    click.option("--layout", help="typewriter or spiral."),
    click.option("--canvas", help="Canvas WIDTHxHEIGHT (typewriter uses only the width)."),
    click.option("--font-scale", help="literal (size = weight) or linear."),
    click.option("--font-min", help="Smallest font size for linear scale."),
    click.option("--font-max", help="Largest font size for linear scale."),
    click.option("--spiral-growth", help="Spiral radius growth per radian."),
    click.option("--spiral-step", help="Spiral sampling step in radians."),
    click.option("--palette-seed", help="Seed for tag colors."),
    click.option("--show-counts/--no-show-counts", default=None, help="Print weights next to tags."),
    click.option("--capitalize/--no-capitalize", default=None, help="Capitalize displayed tags."),
    click.option("--background", help="Background color, #rrggbb."),
    click.option("--font-family", help="SVG font-family."),
    click.option("--words-out", type=click.Path(dir_okay=False), help="Write the raw words, one per line."),
]


def pipeline_options(fn):
    for opt in reversed(PIPELINE_OPTIONS):
        fn = opt(fn)
    return fn


def _config_from(paths, options, fmt=None, out=None) -> PipelineConfig:
    config_path = options.pop("config_path", None)
    options.pop("words_out", None)
    file_settings, file_inputs = read_config_file(config_path) if config_path else ({}, [])
    flags = {k.replace("_", "-"): v for k, v in options.items()}
    flags["format"] = fmt
    settings = resolve_settings(flags, file_settings)
    if not settings["format"] and out and out != "-":
        settings["format"] = SUFFIX_FORMATS.get(Path(out).suffix.lower(), "")
    inputs = list(paths) or file_inputs
    if not inputs:
        raise click.UsageError("no input artifacts given")
    return PipelineConfig.from_settings(settings, inputs)


def _fail(exc: SoftCloudError):
    click.echo(f"softcloud: error: {exc}", err=True)
    sys.exit(exc.exit_code)


@click.group(cls=DefaultGroup)
@click.version_option(package_name="artifact", prog_name="softcloud")
def main():
    """Visualize software artifacts (Java code, JavaDoc HTML, documents) as tag clouds."""


@main.command()
@click.argument("paths", nargs=-1, type=click.Path())
@pipeline_options
@click.option("--out", default="-", show_default=True, help="Output path, or - for stdout.")
@click.option("--format", "fmt", help="svg, html or json (default: from --out extension, else svg).")
@click.option("--dump-config", is_flag=True, help="Print the resolved configuration and exit.")
def generate(paths, out, fmt, dump_config, words_out, **options):
    """Build a tag cloud from PATHS."""
    try:
        cfg = _config_from(paths, options, fmt, out)
        if dump_config:
            click.echo(cfg.to_text(), nl=False)
            return
        start = time.perf_counter()
        result = build(cfg)
        if words_out:
            write_output(result.words.dump().encode("utf-8"), words_out)
        write_output(result.output, out)
        elapsed = (time.perf_counter() - start) * 1000
        click.echo(f"softcloud: {result.tagset.distinct} distinct tags in {elapsed:.0f} ms", err=True)
    except SoftCloudError as exc:
        _fail(exc)


@main.command("eval")
@click.argument("paths", nargs=-1, type=click.Path())
@pipeline_options
@click.option("--cloud-in", type=click.Path(dir_okay=False), help="Judge this JSON tag report instead of a fresh run.")
@click.option("--report", type=click.Path(dir_okay=False), help="Write full-precision metrics as JSON.")
@click.option("--limit", type=int, default=None, help="Show at most N table rows.")
def eval_command(paths, cloud_in, report, limit, words_out, **options):
    """Recount tag frequencies independently and report precision/recall/F-measure.

    Each input is judged on its own; with --cloud-in the given report is judged
    against all inputs together. Filters are not applied to the judged counts.
    """
    try:
        cfg = _config_from(paths, options)
        lem = lemmatizer_for(cfg)
        if cloud_in:
            try:
                claimed = load_json(Path(cloud_in).read_bytes())
            except OSError as exc:
                raise ConfigError(f"{cloud_in}: {exc.strerror or exc}") from exc
            words = ingest_all(cfg.inputs)
            reports = {cloud_in: evaluate_cloud(words, claimed, lem)}
        else:
            reports = {}
            words = WordList()
            for path, kind in cfg.inputs:
                wl = ingest(path, kind)
                words = words + wl
                reports[path] = evaluate_cloud(wl, count_tags(pipeline(wl, lem)), lem)
        if words_out:
            write_output(words.dump().encode("utf-8"), words_out)
        for name, rep in reports.items():
            click.echo(f"== {name}")
            click.echo(rep.to_text(limit), nl=False)
        if report:
            write_output(_combined_json(reports), report)
        failed = [name for name, rep in reports.items() if not rep.perfect]
        if failed:
            for name in failed:
                tags = ", ".join(r.tag for r in reports[name].failures)
                click.echo(f"softcloud: {name}: metrics below 1 for: {tags}", err=True)
            sys.exit(EXIT_EVAL_MISMATCH)
    except SoftCloudError as exc:
        _fail(exc)


def _combined_json(reports: dict[str, MetricsReport]) -> bytes:
    doc = {name: json.loads(rep.to_json()) for name, rep in reports.items()}
    return (json.dumps(doc, indent=2) + "\n").encode("utf-8")


if __name__ == "__main__":
    main()
