"""Shared computation engine: caching of distance matrices and derived
artifacts, keyed by gallery content hash, plus the run manifest embedded
in every export."""

from __future__ import annotations

import datetime
import json
import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .analysis import (
    BootstrapResult,
    Dendrogram,
    Embedding2D,
    SpanningTree,
    bootstrap,
    cluster,
    cross_notation_join,
    mds_embed,
    mst,
)
from .gallery import Gallery
from .metrics import (
    CompressorConfig,
    DEFAULT_COMPRESSOR,
    DistanceMatrix,
    NotationSummary,
    notation_summary,
    distance_matrix,
)
from .tokenizer import registry_digest

CACHE_ENV_VAR = "NOTASCOPE_CACHE_DIR"


def cache_root() -> Path:
    override = os.environ.get(CACHE_ENV_VAR)
    return Path(override) if override else Path(".notascope-cache")


def gallery_timestamp(gallery: Gallery) -> str:
    """Deterministic timestamp: the latest mtime among gallery input files.

    Wall-clock timestamps would break byte-identical reruns, so exports
    carry the input tree's timestamp instead.
    """
    if gallery.root_path is None or not gallery.root_path.is_dir():
        return "1970-01-01T00:00:00Z"
    latest = max(
        (p.stat().st_mtime for p in gallery.root_path.rglob("*") if p.is_file()),
        default=0.0,
    )
    return (
        datetime.datetime.fromtimestamp(latest, tz=datetime.timezone.utc)
        .strftime("%Y-%m-%dT%H:%M:%SZ")
    )


@dataclass(frozen=True)
class RunManifest:
    content_hash: str
    tool_version: str
    compressor: str
    tokenizer_digest: str
    seed: int | None
    timestamp: str

    def to_jsonable(self) -> dict:
        return {
            "content_hash": self.content_hash,
            "tool_version": self.tool_version,
            "compressor": self.compressor,
            "tokenizer_digest": self.tokenizer_digest,
            "seed": self.seed,
            "timestamp": self.timestamp,
        }


class Engine:
    """Computation facade over an immutable gallery.

    Distance matrices are cached in memory and on disk under
    ``<cache-root>/<content_hash>/``; everything downstream is recomputed
    from them on demand and memoized in memory.
    """

    def __init__(self, gallery: Gallery, compressor: CompressorConfig = DEFAULT_COMPRESSOR):
        self.gallery = gallery
        self.compressor = compressor
        self._matrices: dict[tuple[str, str], DistanceMatrix] = {}
        self._summaries: dict[str, NotationSummary] = {}
        self._artifacts: dict[tuple, object] = {}

    def manifest(self, seed: int | None = None) -> RunManifest:
        return RunManifest(
            content_hash=self.gallery.content_hash,
            tool_version=__version__,
            compressor=str(self.compressor),
            tokenizer_digest=registry_digest(),
            seed=seed,
            timestamp=gallery_timestamp(self.gallery),
        )

    # -- distance matrices ------------------------------------------------

    def _cache_dir(self) -> Path:
        return cache_root() / self.gallery.content_hash

    def _matrix_cache_path(self, notation_id: str, metric_id: str) -> Path:
        key = "cd" if metric_id == "cd" else metric_id
        return self._cache_dir() / f"{notation_id}.{key}.{self.compressor}.matrix.json"

    def matrix(self, notation_id: str, metric_id: str) -> DistanceMatrix:
        key = (notation_id, metric_id)
        if key in self._matrices:
            return self._matrices[key]
        path = self._matrix_cache_path(notation_id, metric_id)
        if path.is_file():
            try:
                raw = json.loads(path.read_text(encoding="utf-8"))
                m = DistanceMatrix(
                    notation_id=raw["notation_id"],
                    metric_id=raw["metric_id"],
                    example_ids=tuple(raw["examples"]),
                    values=np.asarray(raw["values"], dtype=np.float64),
                )
                if m.example_ids == tuple(self.gallery.config.examples):
                    self._matrices[key] = m
                    return m
            except (json.JSONDecodeError, KeyError):
                pass  # stale cache entry; recompute below
        m = distance_matrix(self.gallery, notation_id, metric_id, self.compressor)
        self._matrices[key] = m
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(json.dumps(m.to_jsonable(), sort_keys=True), encoding="utf-8")
        except OSError:
            pass  # cache is best-effort
        return m

    # -- summaries and artifacts ------------------------------------------

    def summary(self, notation_id: str) -> NotationSummary:
        if notation_id not in self._summaries:
            self._summaries[notation_id] = notation_summary(
                self.gallery, notation_id, self.matrix(notation_id, "cd"), self.compressor
            )
        return self._summaries[notation_id]

    def embedding(self, notation_id: str, metric_id: str = "cd") -> Embedding2D:
        key = ("embedding", notation_id, metric_id)
        if key not in self._artifacts:
            self._artifacts[key] = mds_embed(self.matrix(notation_id, metric_id))
        return self._artifacts[key]  # type: ignore[return-value]

    def dendrogram(self, notation_id: str, metric_id: str = "cd") -> Dendrogram:
        key = ("dendrogram", notation_id, metric_id)
        if key not in self._artifacts:
            self._artifacts[key] = cluster(self.matrix(notation_id, metric_id))
        return self._artifacts[key]  # type: ignore[return-value]

    def spanning_tree(self, notation_id: str, metric_id: str = "cd") -> SpanningTree:
        key = ("mst", notation_id, metric_id)
        if key not in self._artifacts:
            self._artifacts[key] = mst(self.matrix(notation_id, metric_id))
        return self._artifacts[key]  # type: ignore[return-value]

    def bootstrap(
        self, notation_id: str, metric_name: str, sample_count: int, seed: int
    ) -> BootstrapResult:
        key = ("bootstrap", notation_id, metric_name, sample_count, seed)
        if key not in self._artifacts:
            self._artifacts[key] = bootstrap(
                self.gallery,
                notation_id,
                metric_name,
                sample_count,
                seed,
                self.compressor,
                cd_matrix=self.matrix(notation_id, "cd") if metric_name == "sprawl" else None,
            )
        return self._artifacts[key]  # type: ignore[return-value]

    def join(self, notation_a: str, notation_b: str, metric_id: str = "cd"):
        return cross_notation_join(
            self.gallery,
            notation_a,
            notation_b,
            metric_id,
            self.compressor,
            matrix_a=self.matrix(notation_a, metric_id),
            matrix_b=self.matrix(notation_b, metric_id),
        )
