import json
import os
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest
from click.testing import CliRunner

from softcloud.cli import main

from conftest import JAVADOC_TXT, synthetic_artifact

SVG = "{http://www.w3.org/2000/svg}"


@pytest.fixture
def runner():
    return CliRunner()


def run(runner, *args, env=None):
    return runner.invoke(main, [str(a) for a in args], env=env or {"SOFTCLOUD_SEED": ""}, catch_exceptions=False)


def first_text(path):
    return ET.parse(path).getroot().find(f"{SVG}text").text


def test_generate_frequency_cloud(runner, tmp_path):
    out = tmp_path / "cloud.svg"
    res = run(runner, "generate", JAVADOC_TXT, "--order", "freq", "--layout", "typewriter", "--out", out)
    assert res.exit_code == 0, res.output
    assert first_text(out) == "Exception"
    assert "66 distinct tags" in res.stderr


def test_default_subcommand(runner, tmp_path):
    out = tmp_path / "cloud.svg"
    assert run(runner, JAVADOC_TXT, "--out", out).exit_code == 0
    assert first_text(out) == "All"  # alphabetical default


def test_stdout_and_format_override(runner, tmp_path):
    res = run(runner, JAVADOC_TXT, "--format", "json", "--order", "freq")
    rows = json.loads(res.stdout)
    assert rows[0] == {"tag": "exception", "weight": 9, "rank": 1}
    html = tmp_path / "c.html"
    run(runner, JAVADOC_TXT, "--out", html)
    assert html.read_bytes().startswith(b"<!DOCTYPE html>")
    forced = tmp_path / "c.html"
    run(runner, JAVADOC_TXT, "--out", forced, "--format", "svg")
    assert forced.read_bytes().startswith(b"<svg")


def test_no_inputs_is_usage_error(runner):
    res = run(runner, "generate")
    assert res.exit_code == 2
    assert "Usage" in res.output or "Usage" in res.stderr


def test_missing_input_exit_1(runner, tmp_path):
    res = run(runner, tmp_path / "absent.txt")
    assert res.exit_code == 1
    assert "absent.txt" in res.stderr


def test_bad_config_exit_2(runner):
    assert run(runner, JAVADOC_TXT, "--layout", "circle").exit_code == 2
    assert run(runner, JAVADOC_TXT, "--seed", "-4").exit_code == 2


def test_layout_failure_exit_3(runner):
    res = run(runner, JAVADOC_TXT, "--layout", "spiral", "--canvas", "60x40")
    assert res.exit_code == 3
    assert "canvas" in res.stderr


def test_words_out(runner, tmp_path):
    words = tmp_path / "words.txt"
    res = run(runner, JAVADOC_TXT, "--words-out", words, "--out", tmp_path / "c.svg")
    assert res.exit_code == 0
    lines = words.read_text().splitlines()
    assert lines[:2] == ["Class", "Summary"] and "getLineNr" in lines


def test_stop_words_and_top(runner, tmp_path):
    stop = tmp_path / "stop.txt"
    stop.write_text("exception\nthe\n")
    res = run(runner, JAVADOC_TXT, "--stop-words", stop, "--top", "3", "--order", "freq", "--format", "json")
    assert [r["tag"] for r in json.loads(res.stdout)] == ["java", "lang", "line"]


def test_stem_exceptions(runner, tmp_path):
    exc = tmp_path / "exc.tsv"
    exc.write_text("nr\tnumber\n")
    res = run(runner, JAVADOC_TXT, "--stem-exceptions", exc, "--format", "json")
    tags = {r["tag"] for r in json.loads(res.stdout)}
    assert "number" in tags and "nr" not in tags


def test_show_counts(runner):
    res = run(runner, JAVADOC_TXT, "--show-counts")
    assert "<tspan" in res.stdout


def test_config_file_and_dump(runner, tmp_path):
    conf = tmp_path / "c.conf"
    conf.write_text(f"input = {JAVADOC_TXT}\norder = freq\nseed = 3\n")
    res = run(runner, "generate", "--config", conf, "--seed", "8", "--dump-config")
    assert res.exit_code == 0
    assert f"input = {JAVADOC_TXT}" in res.stdout
    assert "order = freq" in res.stdout and "seed = 8" in res.stdout


def test_env_seed(runner):
    res = run(runner, JAVADOC_TXT, "--dump-config", env={"SOFTCLOUD_SEED": "77"})
    assert "seed = 77" in res.stdout


def test_deterministic_across_processes(tmp_path):
    outs = []
    for hashseed in ("1", "2"):
        out = tmp_path / f"c{hashseed}.svg"
        env = {**os.environ, "PYTHONHASHSEED": hashseed}
        subprocess.run(
            [sys.executable, "-m", "softcloud.cli", str(JAVADOC_TXT), "--layout", "spiral", "--order", "random",
             "--seed", "5", "--out", str(out)],
            check=True, env=env, capture_output=True,
        )
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_eval_clean(runner):
    res = run(runner, "eval", JAVADOC_TXT)
    assert res.exit_code == 0
    assert "0 below 1" in res.stdout


def test_eval_detects_corruption(runner, tmp_path):
    rows = json.loads(run(runner, JAVADOC_TXT, "--format", "json").stdout)
    for r in rows:
        if r["tag"] == "trace":
            r["weight"] += 1
    rows = [r for r in rows if r["tag"] != "java"]
    claimed = tmp_path / "claimed.json"
    claimed.write_text(json.dumps(rows))
    report = tmp_path / "report.json"
    res = run(runner, "eval", JAVADOC_TXT, "--cloud-in", claimed, "--report", report)
    assert res.exit_code == 4
    assert "java, trace" in res.stderr
    doc = json.loads(report.read_text())[str(claimed)]
    assert doc["perfect"] is False


def test_eval_unreadable_cloud(runner, tmp_path):
    res = run(runner, "eval", JAVADOC_TXT, "--cloud-in", tmp_path / "none.json")
    assert res.exit_code == 2


def test_eval_sweep_of_random_artifacts(runner, tmp_path):
    paths = []
    for seed in range(20):
        suffix, text = synthetic_artifact(seed, 300)
        p = tmp_path / f"a{seed}{suffix}"
        p.write_text(text)
        paths.append(p)
    res = run(runner, "eval", *paths, "--limit", "1")
    assert res.exit_code == 0, res.stderr
    assert res.stdout.count("0 below 1") == 20
