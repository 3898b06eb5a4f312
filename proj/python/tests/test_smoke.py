# SPDX-License-Identifier: Apache-2.0
"""End-to-end smoke tests for the mwclint extension module."""

import os
import pathlib
import re

import pytest

import mwclint

MINT_SNIPPET = """module 0x1::Asset {
    public fun mint() {
        supply = supply + 1000;
    }
}
"""


def corpus_dir() -> pathlib.Path:
    env = os.environ.get("MWC_FIXTURE_CORPUS")
    if env:
        return pathlib.Path(env)
    return pathlib.Path(__file__).resolve().parents[2] / "corpus"


def test_version_is_semver():
    assert re.fullmatch(r"\d+\.\d+\.\d+", mwclint.__version__)


def test_rules_cover_the_catalog():
    records = mwclint.rules()
    assert len(records) == 38
    ids = {r["id"] for r in records}
    assert {"MWC-100", "MWC-101", "MWC-120a", "MWC-120b", "MWC-136"} <= ids
    for r in records:
        assert r["frame"]
        assert r["strategy"] in {"syntactic", "flow", "advisory"}
        assert r["severity"] in {"low", "medium", "high", "critical"}


def test_frames_partition_the_catalog():
    frames = mwclint.frames()
    members = [rid for f in frames for rid in f["members"]]
    assert len(members) == 38
    assert len(set(members)) == 38
    primaries = [f for f in frames if not f["supplementary"]]
    assert sorted(f["code"] for f in primaries) == [
        "BMI", "FLA", "GSM", "IMI", "MTS", "SRS",
    ]


def test_explain_resolves_bare_numbers_with_a_note():
    rec = mwclint.explain("MWC-120")
    assert rec["id"] == "MWC-120a"
    assert "note" in rec
    with pytest.raises(KeyError):
        mwclint.explain("MWC-999")


def test_crosswalk_pairs_the_reentrancy_analogue():
    rows = mwclint.crosswalk("MWC-101")
    assert rows
    pairs = [p for row in rows for p in row["pairs"]]
    assert {"swc": "SWC-101", "mwc": "MWC-101"} in pairs


def test_scan_text_reports_unauthorized_minting():
    report = mwclint.scan_text(MINT_SNIPPET, name="mint.move")
    assert report["verdict"] == "Failed"
    assert len(report["summary"]) == 8
    rules_hit = {f["rule"] for f in report["findings"]}
    assert "MWC-111" in rules_hit
    mint = next(f for f in report["findings"] if f["rule"] == "MWC-111")
    assert mint["line"] == 3
    assert mint["severity"] == "high"


def test_scan_text_honours_config_overrides():
    report = mwclint.scan_text(
        MINT_SNIPPET, config={"enabled_rules": ["MWC-103"]}
    )
    assert report["findings"] == []
    assert report["verdict"] == "Passed"
    with pytest.raises(ValueError):
        mwclint.scan_text(MINT_SNIPPET, config={"enabled_rules": ["MWC-999"]})


def test_scan_text_renders_other_formats():
    md = mwclint.scan_text(MINT_SNIPPET, format="md")
    assert "## Findings" in md and "**Failed**" in md
    sarif = mwclint.scan_text(MINT_SNIPPET, format="sarif")
    assert '"version": "2.1.0"' in sarif
    with pytest.raises(ValueError):
        mwclint.scan_text(MINT_SNIPPET, format="pdf")


def test_scan_paths_over_the_fixture_corpus():
    corpus = corpus_dir()
    if not corpus.is_dir():
        pytest.skip("fixture corpus not available")
    report = mwclint.scan_paths(str(corpus), jobs=2)
    assert report["target"]["files"] == 60
    assert report["verdict"] == "Failed"
    assert mwclint.scan_paths(str(corpus), jobs=1) == report


def test_check_and_format_source():
    bad = mwclint.check_source("module 0x1::A { fun (")
    assert not bad["ok"]
    assert bad["diagnostics"]
    assert all("line" in d for d in bad["diagnostics"])

    good = mwclint.check_source(MINT_SNIPPET)
    assert good["ok"] and good["diagnostics"] == []

    pretty = mwclint.format_source("module 0x1::A {fun f(){let x=1;}}")
    assert mwclint.format_source(pretty) == pretty
    with pytest.raises(ValueError):
        mwclint.format_source("fun (")


def test_evaluate_fixtures_gate():
    corpus = corpus_dir()
    if not corpus.is_dir():
        pytest.skip("fixture corpus not available")
    metrics = mwclint.evaluate_fixtures(str(corpus))
    assert metrics["gate_passed"] is True
    assert metrics["recall"] == 1.0
    assert metrics["fp_fixed_total"] == 0
    assert len(metrics["per_rule"]) == 30
    with pytest.raises(ValueError):
        mwclint.evaluate_fixtures(str(corpus / "does-not-exist"))


def test_default_config_round_trips():
    cfg = mwclint.default_config()
    assert cfg["fail_on"] == "high"
    assert cfg["format"] == "json"
    assert "MWC-111" in cfg["enabled_rules"]
    report = mwclint.scan_text(MINT_SNIPPET, config=cfg)
    assert report == mwclint.scan_text(MINT_SNIPPET)
