import json
import shutil
from pathlib import Path

import pytest
from click.testing import CliRunner

from notascope.cli import main

from .conftest import SAMPLE_GALLERY


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("NOTASCOPE_CACHE_DIR", str(tmp_path / "cache"))


def test_validate_ok(runner):
    result = runner.invoke(main, ["validate", str(SAMPLE_GALLERY)])
    assert result.exit_code == 0
    assert "3 notations × 12 examples, complete" in result.output


def test_validate_missing_file(runner, gallery_copy):
    (gallery_copy / "r-gg" / "scatter.R").unlink()
    result = runner.invoke(main, ["validate", str(gallery_copy)])
    assert result.exit_code == 1
    assert "'r-gg'" in result.output and "'scatter'" in result.output


def test_validate_unreadable_directory(runner, tmp_path):
    result = runner.invoke(main, ["validate", str(tmp_path / "does-not-exist")])
    assert result.exit_code == 2


def test_metrics_csv_schema(runner, tmp_path):
    out = tmp_path / "out"
    result = runner.invoke(
        main, ["metrics", str(SAMPLE_GALLERY), "--format", "csv", "--out", str(out)]
    )
    assert result.exit_code == 0, result.output
    lines = (out / "metrics.csv").read_text().splitlines()
    assert lines[0] == "notation,example,metric,value"
    metrics = {line.split(",")[2] for line in lines[1:]}
    assert {"spec_length", "remoteness_cd", "median_spec_length", "vocabulary_size", "sprawl"} <= metrics
    assert (out / "manifest.json").is_file()
    assert (out / "json-vl.cd.matrix.json").is_file()
    assert (out / "json-vl.token_ld.matrix.json").is_file()


def test_metrics_json_nested_by_notation(runner, tmp_path):
    out = tmp_path / "out"
    result = runner.invoke(main, ["metrics", str(SAMPLE_GALLERY), "--out", str(out)])
    assert result.exit_code == 0, result.output
    payload = json.loads((out / "metrics.json").read_text())
    assert set(payload["notations"]) == {"json-vl", "python-alt", "r-gg"}
    for body in payload["notations"].values():
        assert {"median_spec_length", "vocabulary_size", "sprawl", "lengths", "remoteness"} <= set(body)


def test_metrics_deterministic_rerun(runner, tmp_path):
    outs = []
    for name in ("a", "b"):
        out = tmp_path / name
        result = runner.invoke(
            main, ["metrics", str(SAMPLE_GALLERY), "--format", "csv", "--out", str(out), "--seed", "4"]
        )
        assert result.exit_code == 0
        outs.append({p.name: p.read_bytes() for p in sorted(out.iterdir())})
    assert outs[0] == outs[1]


def test_metrics_lzma_manifest(runner, tmp_path):
    out = tmp_path / "out"
    result = runner.invoke(
        main, ["metrics", str(SAMPLE_GALLERY), "--compressor", "lzma:9", "--out", str(out)]
    )
    assert result.exit_code == 0, result.output
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["compressor"] == "lzma:9"
    m = json.loads((out / "r-gg.cd.matrix.json").read_text())
    import numpy as np

    v = np.asarray(m["values"])
    assert np.array_equal(v, v.T)
    assert np.all(np.diag(v) == 0)


def test_analyze_mst_edge_counts(runner, tmp_path):
    out = tmp_path / "out"
    result = runner.invoke(
        main, ["analyze", str(SAMPLE_GALLERY), "--artifacts", "mst", "--out", str(out)]
    )
    assert result.exit_code == 0, result.output
    for nid in ("json-vl", "python-alt", "r-gg"):
        payload = json.loads((out / f"{nid}.mst.json").read_text())
        assert len(payload["edges"]) == 11


def test_analyze_unknown_artifact(runner, tmp_path):
    result = runner.invoke(
        main, ["analyze", str(SAMPLE_GALLERY), "--artifacts", "nope", "--out", str(tmp_path / "x")]
    )
    assert result.exit_code == 1
    assert "mds" in result.output and "bootstrap" in result.output


def test_analyze_bootstrap_deterministic(runner, tmp_path):
    outs = []
    for name in ("a", "b"):
        out = tmp_path / name
        result = runner.invoke(
            main,
            [
                "analyze", str(SAMPLE_GALLERY), "--artifacts", "bootstrap",
                "--samples", "50", "--seed", "7", "--out", str(out),
            ],
        )
        assert result.exit_code == 0, result.output
        outs.append({p.name: p.read_bytes() for p in sorted(out.iterdir())})
    assert outs[0] == outs[1]


def test_analyze_all_artifacts(runner, tmp_path):
    out = tmp_path / "out"
    result = runner.invoke(
        main, ["analyze", str(SAMPLE_GALLERY), "--samples", "20", "--out", str(out)]
    )
    assert result.exit_code == 0, result.output
    names = {p.name for p in out.iterdir()}
    for nid in ("json-vl", "python-alt", "r-gg"):
        for art in ("mds", "dendrogram", "mst", "bootstrap"):
            assert f"{nid}.{art}.json" in names
    dendro = json.loads((out / "r-gg.dendrogram.json").read_text())
    assert len(dendro["merges"]) == 11


def test_manifest_fields(runner, tmp_path):
    out = tmp_path / "out"
    runner.invoke(main, ["metrics", str(SAMPLE_GALLERY), "--out", str(out)])
    manifest = json.loads((out / "manifest.json").read_text())
    assert set(manifest) == {
        "content_hash", "tool_version", "compressor", "tokenizer_digest", "seed", "timestamp",
    }
    assert len(manifest["content_hash"]) == 64
