import hashlib
import json
import xml.etree.ElementTree as ET
from html.parser import HTMLParser

import pytest

from softcloud.errors import ConfigError
from softcloud.layout import PlacedCloud, PlacedTag, assign_colors, layout_spiral, layout_typewriter
from softcloud.render import (
    ASCENT_FACTOR,
    RenderConfig,
    export_json,
    hex_color,
    load_json,
    parse_color,
    render,
    render_html,
    render_svg,
)
from softcloud.tagmodel import OrderMode, Tag, TagSet

SVG = "{http://www.w3.org/2000/svg}"


def sample_cloud():
    tags = [Tag("exception", 10), Tag("java", 7), Tag("line", 6), Tag("get", 4), Tag("from", 2)]
    return assign_colors(layout_spiral(tags, 800, 600), 0)


def texts(svg_bytes):
    return ET.fromstring(svg_bytes).findall(f"{SVG}text")


def test_empty_cloud_is_background_only():
    svg = render_svg(PlacedCloud((), 800, 600, "spiral"))
    root = ET.fromstring(svg)
    assert [c.tag for c in root] == [f"{SVG}rect"]
    assert root.get("width") == "800.00"


def test_single_tag():
    tag = PlacedTag("Get", 4, 10.0, 20.0, 30.0, 12.0, 10.0, (17, 34, 51))
    (el,) = texts(render_svg(PlacedCloud((tag,), 100, 50, "typewriter")))
    assert el.text == "Get"
    assert float(el.get("x")) == 10.0
    assert float(el.get("y")) == 20.0 + ASCENT_FACTOR * 10.0
    assert el.get("fill") == "#112233"
    assert el.get("data-weight") == "4"


def test_round_trip_recovers_placement():
    cloud = sample_cloud()
    elements = texts(render_svg(cloud))
    assert len(elements) == len(cloud.tags)
    for el, t in zip(elements, cloud.tags):
        size = float(el.get("font-size"))
        assert el.text == t.text
        assert float(el.get("x")) == pytest.approx(t.x, abs=0.005)
        assert float(el.get("y")) - ASCENT_FACTOR * size == pytest.approx(t.y, abs=0.01)
        assert size == pytest.approx(t.font_size, abs=0.005)
        assert el.get("fill") == hex_color(t.color)


def test_markup_is_escaped():
    tag = PlacedTag("a<b&c", 1, 1, 1, 10, 10, 10, (0, 0, 0))
    (el,) = texts(render_svg(PlacedCloud((tag,), 50, 50, "spiral")))
    assert el.text == "a<b&c"


def test_show_counts_adds_tspan():
    cloud = sample_cloud()
    el = texts(render_svg(cloud, RenderConfig(show_counts=True)))[0]
    (span,) = el.findall(f"{SVG}tspan")
    assert span.text == "10"


def test_byte_identical():
    a = hashlib.sha256(render_svg(sample_cloud())).hexdigest()
    b = hashlib.sha256(render_svg(sample_cloud())).hexdigest()
    assert a == b
    assert b"\r" not in render_svg(sample_cloud())


class _Balance(HTMLParser):
    VOID = {"meta", "br", "img", "link", "hr", "input"}

    def __init__(self):
        super().__init__()
        self.stack, self.ok = [], True

    def handle_starttag(self, tag, attrs):
        if tag not in self.VOID:
            self.stack.append(tag)

    def handle_startendtag(self, tag, attrs):
        pass

    def handle_endtag(self, tag):
        if not self.stack or self.stack.pop() != tag:
            self.ok = False


def test_html_embeds_svg_and_is_well_formed():
    cloud = sample_cloud()
    svg, page = render_svg(cloud), render_html(cloud)
    assert svg in page
    assert page.startswith(b"<!DOCTYPE html>")
    ET.fromstring(page.split(b"\n", 1)[1])  # everything after the doctype is XML
    checker = _Balance()
    checker.feed(page.decode())
    checker.close()
    assert checker.ok and not checker.stack


def test_export_json_single():
    rows = json.loads(export_json(TagSet({"exception": 10}), OrderMode("freq")))
    assert rows == [{"tag": "exception", "weight": 10, "rank": 1}]


def test_export_json_empty():
    assert export_json(TagSet({}), OrderMode("alpha")) == b"[]\n"


def test_export_json_frequency_ranking():
    ts = TagSet({"exception": 10, "from": 2, "get": 4, "java": 7, "line": 6})
    rows = json.loads(export_json(ts, OrderMode("freq")))
    assert [r["tag"] for r in rows] == ["exception", "java", "line", "get", "from"]
    assert [r["rank"] for r in rows] == [1, 2, 3, 4, 5]


def test_json_round_trip():
    ts = TagSet({"exception": 10, "from": 2, "get": 4})
    assert load_json(export_json(ts, OrderMode("random", 3))) == ts


@pytest.mark.parametrize("bad", [b"{", b'[{"tag": "a"}]', b'[{"tag": "a", "weight": 0}]', b"3"])
def test_load_json_rejects(bad):
    with pytest.raises(ConfigError):
        load_json(bad)


def test_render_dispatch():
    cloud, ts = layout_typewriter([Tag("a", 1)], 100), TagSet({"a": 1})
    assert render(cloud, ts, OrderMode("alpha"), RenderConfig()).startswith(b"<svg")
    assert render(cloud, ts, OrderMode("alpha"), RenderConfig(output_format="html")).startswith(b"<!DOCTYPE")
    assert render(cloud, ts, OrderMode("alpha"), RenderConfig(output_format="json")).startswith(b"[")
    with pytest.raises(ConfigError):
        RenderConfig(output_format="png")


@pytest.mark.parametrize("value, rgb", [("#ffffff", (255, 255, 255)), ("0,128, 255", (0, 128, 255))])
def test_parse_color(value, rgb):
    assert parse_color(value) == rgb


@pytest.mark.parametrize("value", ["#fff", "1,2", "300,0,0", "red"])
def test_parse_color_rejects(value):
    with pytest.raises(ConfigError):
        parse_color(value)
