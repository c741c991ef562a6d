"""Command-line entry point.

Exit codes: 0 success, 1 domain error (invalid gallery, unknown artifact),
2 environment or I/O failure.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from pathlib import Path

import click

from .engine import Engine
from .errors import GalleryLoadError, NotascopeError
from .gallery import Gallery, load_gallery
from .analysis import BOOTSTRAP_METRICS, correlate
from .metrics import CompressorConfig

ARTIFACT_NAMES = ("mds", "dendrogram", "mst", "bootstrap")


def _load(root: str) -> Gallery:
    try:
        return load_gallery(root)
    except GalleryLoadError as exc:
        for v in exc.violations:
            click.echo(f"error: {v}", err=True)
        sys.exit(1)
    except OSError as exc:
        click.echo(f"i/o error: {exc}", err=True)
        sys.exit(2)


def _write_json(path: Path, payload: dict) -> None:
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")


@click.group()
def main() -> None:
    """Notation-metrics workbench for multi-notation galleries."""


@main.command()
@click.argument("gallery_root", type=click.Path())
def validate(gallery_root: str) -> None:
    """Check gallery completeness and configuration."""
    if not Path(gallery_root).is_dir():
        click.echo(f"i/o error: not a readable directory: {gallery_root}", err=True)
        sys.exit(2)
    gallery = _load(gallery_root)
    n = len(gallery.notation_ids)
    m = len(gallery.example_ids)
    click.echo(f"{n} notations × {m} examples, complete")
    click.echo(f"dataset: {gallery.config.dataset_name}")
    click.echo(f"content hash: {gallery.content_hash}")
    sys.exit(0)


def _metrics_csv(engine: Engine, corr: dict[str, float]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["notation", "example", "metric", "value"])
    g = engine.gallery
    for nid in g.notation_ids:
        summary = engine.summary(nid)
        for e in g.example_ids:
            writer.writerow([nid, e, "spec_length", g.spec(nid, e).byte_length])
        for e in g.example_ids:
            writer.writerow([nid, e, "remoteness_cd", summary.remoteness.get(e, "")])
        writer.writerow([nid, "", "median_spec_length", summary.median_spec_length])
        writer.writerow([nid, "", "vocabulary_size", summary.vocabulary_size])
        writer.writerow([nid, "", "sprawl", summary.sprawl])
        writer.writerow([nid, "", "ld_cd_pearson_r", corr[nid]])
    return buf.getvalue()


def _metrics_json(engine: Engine, corr_reports: dict[str, dict]) -> dict:
    g = engine.gallery
    notations = {}
    for nid in g.notation_ids:
        summary = engine.summary(nid)
        notations[nid] = {
            "language_id": summary.language_id,
            "median_spec_length": summary.median_spec_length,
            "vocabulary_size": summary.vocabulary_size,
            "sprawl": summary.sprawl,
            "lengths": {e: g.spec(nid, e).byte_length for e in g.example_ids},
            "remoteness": {e: round(v, 10) for e, v in summary.remoteness.items()},
            "ld_cd_correlation": corr_reports[nid],
        }
    return {"dataset_name": g.config.dataset_name, "notations": notations}


@main.command("metrics")
@click.argument("gallery_root", type=click.Path())
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
@click.option("--out", type=click.Path(), default="notascope-out")
@click.option("--compressor", default="zlib:9", help="algorithm:level, e.g. zlib:9 or lzma:6")
@click.option("--seed", type=int, default=0)
def cmd_metrics(gallery_root: str, fmt: str, out: str, compressor: str, seed: int) -> None:
    """Compute and export lengths, summaries, matrices, and correlations."""
    gallery = _load(gallery_root)
    try:
        engine = Engine(gallery, CompressorConfig.parse(compressor))
        out_dir = Path(out)
        out_dir.mkdir(parents=True, exist_ok=True)

        corr_reports: dict[str, dict] = {}
        corr_r: dict[str, float] = {}
        for nid in gallery.notation_ids:
            cd_m = engine.matrix(nid, "cd")
            ld_m = engine.matrix(nid, "token_ld")
            _write_json(out_dir / f"{nid}.cd.matrix.json", cd_m.to_jsonable())
            _write_json(out_dir / f"{nid}.token_ld.matrix.json", ld_m.to_jsonable())
            report = correlate(ld_m, cd_m, permutations=999, seed=seed)
            corr_reports[nid] = report.to_jsonable()
            corr_r[nid] = round(report.pearson_r, 12)

        if fmt == "csv":
            (out_dir / "metrics.csv").write_text(_metrics_csv(engine, corr_r), encoding="utf-8")
        else:
            _write_json(out_dir / "metrics.json", _metrics_json(engine, corr_reports))
        _write_json(out_dir / "manifest.json", engine.manifest(seed).to_jsonable())
    except NotascopeError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    except OSError as exc:
        click.echo(f"i/o error: {exc}", err=True)
        sys.exit(2)
    click.echo(f"wrote metrics to {out_dir}")
    sys.exit(0)


@main.command("analyze")
@click.argument("gallery_root", type=click.Path())
@click.option("--artifacts", default="mds,dendrogram,mst,bootstrap")
@click.option("--samples", type=int, default=1000)
@click.option("--seed", type=int, default=0)
@click.option("--compressor", default="zlib:9")
@click.option("--out", type=click.Path(), default="notascope-out")
def cmd_analyze(
    gallery_root: str, artifacts: str, samples: int, seed: int, compressor: str, out: str
) -> None:
    """Export per-notation analysis artifacts as JSON."""
    requested = [a.strip() for a in artifacts.split(",") if a.strip()]
    unknown = [a for a in requested if a not in ARTIFACT_NAMES]
    if unknown:
        click.echo(
            f"error: unknown artifact(s) {', '.join(unknown)}; "
            f"valid names: {', '.join(ARTIFACT_NAMES)}",
            err=True,
        )
        sys.exit(1)
    gallery = _load(gallery_root)
    try:
        engine = Engine(gallery, CompressorConfig.parse(compressor))
        out_dir = Path(out)
        out_dir.mkdir(parents=True, exist_ok=True)
        for nid in gallery.notation_ids:
            if "mds" in requested:
                _write_json(out_dir / f"{nid}.mds.json", engine.embedding(nid).to_jsonable())
            if "dendrogram" in requested:
                _write_json(out_dir / f"{nid}.dendrogram.json", engine.dendrogram(nid).to_jsonable())
            if "mst" in requested:
                _write_json(out_dir / f"{nid}.mst.json", engine.spanning_tree(nid).to_jsonable())
            if "bootstrap" in requested:
                payload = {
                    metric: engine.bootstrap(nid, metric, samples, seed).to_jsonable()
                    for metric in BOOTSTRAP_METRICS
                }
                _write_json(out_dir / f"{nid}.bootstrap.json", payload)
        _write_json(out_dir / "manifest.json", engine.manifest(seed).to_jsonable())
    except NotascopeError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    except OSError as exc:
        click.echo(f"i/o error: {exc}", err=True)
        sys.exit(2)
    click.echo(f"wrote artifacts to {out_dir}")
    sys.exit(0)


@main.command("serve")
@click.argument("gallery_root", type=click.Path())
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8040)
@click.option("--static-dir", type=click.Path(), default=None)
@click.option("--compressor", default="zlib:9")
def cmd_serve(gallery_root: str, host: str, port: int, static_dir: str | None, compressor: str) -> None:
    """Serve the read-only HTTP API (and optionally the UI bundle)."""
    gallery = _load(gallery_root)

    import uvicorn

    from .service import create_app

    app = create_app(Engine(gallery, CompressorConfig.parse(compressor)), static_dir=static_dir)
    try:
        uvicorn.run(app, host=host, port=port, log_level="warning")
    except SystemExit:
        raise
    except OSError as exc:
        click.echo(f"error: could not bind {host}:{port}: {exc}", err=True)
        sys.exit(1)


if __name__ == "__main__":
    main()
