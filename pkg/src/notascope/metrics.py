"""Per-spec and per-notation metrics: length, token edit distance,
compression distance, remoteness, and sprawl."""

from __future__ import annotations

import lzma
import zlib
from dataclasses import dataclass, field

import numpy as np

from ._kernels import levenshtein_ids
from .errors import CompressorUnavailable, DegenerateGallery, ShapeMismatch, UnknownNotation
from .gallery import Gallery, Spec
from .tokenizer import TokenStream, gallery_streams

METRIC_IDS = ("cd", "token_ld")


@dataclass(frozen=True)
class CompressorConfig:
    """Compressor identity carried through every distance computation.

    ``zlib:9`` is the default; it reproduces the reference single-token
    distances (7 and 10) exactly.
    """

    algorithm: str = "zlib"
    level: int = 9

    @classmethod
    def parse(cls, text: str) -> "CompressorConfig":
        algorithm, _, level = text.partition(":")
        return cls(algorithm=algorithm, level=int(level) if level else 9)

    def __str__(self) -> str:
        return f"{self.algorithm}:{self.level}"


DEFAULT_COMPRESSOR = CompressorConfig()


def compress(data: bytes, compressor: CompressorConfig = DEFAULT_COMPRESSOR) -> int:
    """Length in bytes of the deterministic compressed form of ``data``."""
    if compressor.algorithm == "zlib":
        return len(zlib.compress(data, compressor.level))
    if compressor.algorithm == "lzma":
        try:
            return len(lzma.compress(data, preset=compressor.level))
        except lzma.LZMAError as exc:  # pragma: no cover
            raise CompressorUnavailable(str(exc)) from exc
    raise CompressorUnavailable(f"unknown compressor algorithm {compressor.algorithm!r}")


def spec_length(spec: Spec) -> int:
    return spec.byte_length


def _median(values: list[float]) -> float:
    # mean-of-middle-two for even counts, everywhere
    vals = sorted(values)
    k = len(vals)
    if k == 0:
        raise ValueError("median of empty sequence")
    mid = k // 2
    if k % 2:
        return float(vals[mid])
    return (vals[mid - 1] + vals[mid]) / 2.0


def median_spec_length(gallery: Gallery, notation_id: str) -> float:
    if notation_id not in gallery.notation_ids:
        raise UnknownNotation(notation_id)
    return _median([s.byte_length for s in gallery.notation_specs(notation_id)])


def token_levenshtein(a: TokenStream, b: TokenStream) -> int:
    """Minimum single-token insert/delete/substitute count between streams.

    Operates on lexeme sequences with comments excluded; cost is unit per
    operation, equality is exact lexeme match.
    """
    return lexeme_levenshtein(a.lexemes(), b.lexemes())


def lexeme_levenshtein(a: list[str], b: list[str]) -> int:
    interned: dict[str, int] = {}
    ids_a = np.fromiter((interned.setdefault(x, len(interned)) for x in a), dtype=np.int32, count=len(a))
    ids_b = np.fromiter((interned.setdefault(x, len(interned)) for x in b), dtype=np.int32, count=len(b))
    return int(levenshtein_ids(ids_a, ids_b))


def compression_distance_texts(
    first: str, second: str, compressor: CompressorConfig = DEFAULT_COMPRESSOR
) -> float:
    """CD over two texts with a fixed concatenation order (first before second).

    Clamped at zero: tiny inputs can compress to slightly less jointly than
    alone due to header overhead.
    """
    ca = compress(first.encode("utf-8"), compressor)
    cb = compress(second.encode("utf-8"), compressor)
    cab = compress((first + second).encode("utf-8"), compressor)
    return float(max(0, cab - min(ca, cb)))


def compression_distance(
    a: Spec, b: Spec, compressor: CompressorConfig = DEFAULT_COMPRESSOR, gallery: Gallery | None = None
) -> float:
    """CD between two specs; concatenation ordered by canonical example index."""
    # equal normalized texts are distance 0 by fiat (the raw formula would
    # charge a few back-reference bytes even for identical inputs)
    if a.normalized_text == b.normalized_text:
        return 0.0
    first, second = a, b
    if gallery is not None:
        order = {e: i for i, e in enumerate(gallery.config.examples)}
        if order.get(b.example_id, 0) < order.get(a.example_id, 0):
            first, second = b, a
    elif b.example_id < a.example_id:
        first, second = b, a
    return compression_distance_texts(first.normalized_text, second.normalized_text, compressor)


@dataclass(frozen=True)
class DistanceMatrix:
    notation_id: str
    metric_id: str
    example_ids: tuple[str, ...]  # gallery canonical order
    values: np.ndarray  # n x n, symmetric, zero diagonal

    @property
    def n(self) -> int:
        return len(self.example_ids)

    def upper_triangle(self) -> np.ndarray:
        iu = np.triu_indices(self.n, k=1)
        return self.values[iu]

    def to_jsonable(self) -> dict:
        return {
            "notation_id": self.notation_id,
            "metric_id": self.metric_id,
            "examples": list(self.example_ids),
            "values": [[round(float(v), 10) for v in row] for row in self.values],
        }


def distance_matrix(
    gallery: Gallery,
    notation_id: str,
    metric_id: str,
    compressor: CompressorConfig = DEFAULT_COMPRESSOR,
) -> DistanceMatrix:
    """Pairwise distances over a notation's specs in canonical example order.

    Upper triangle is computed, mirrored to the lower, diagonal zeroed, so
    symmetry holds exactly by construction.
    """
    if notation_id not in gallery.notation_ids:
        raise UnknownNotation(notation_id)
    if metric_id not in METRIC_IDS:
        from .errors import UnknownMetric

        raise UnknownMetric(metric_id)
    specs = gallery.notation_specs(notation_id)
    n = len(specs)
    values = np.zeros((n, n), dtype=np.float64)

    if metric_id == "cd":
        blobs = [s.normalized_text.encode("utf-8") for s in specs]
        singles = [compress(b, compressor) for b in blobs]
        for i in range(n):
            for j in range(i + 1, n):
                if blobs[i] == blobs[j]:
                    continue
                cab = compress(blobs[i] + blobs[j], compressor)
                values[i, j] = values[j, i] = max(0, cab - min(singles[i], singles[j]))
    else:
        streams = gallery_streams(gallery, notation_id)
        interned: dict[str, int] = {}
        id_seqs = []
        for st in streams:
            lex = st.lexemes()
            id_seqs.append(
                np.fromiter((interned.setdefault(x, len(interned)) for x in lex), dtype=np.int32, count=len(lex))
            )
        for i in range(n):
            for j in range(i + 1, n):
                d = levenshtein_ids(id_seqs[i], id_seqs[j])
                values[i, j] = values[j, i] = d

    return DistanceMatrix(
        notation_id=notation_id,
        metric_id=metric_id,
        example_ids=tuple(gallery.config.examples),
        values=values,
    )


def remoteness(matrix: DistanceMatrix, example_index: int) -> float:
    """Median of one example's row, diagonal excluded."""
    if matrix.n < 2:
        raise DegenerateGallery("remoteness needs at least 2 examples")
    row = [float(matrix.values[example_index, j]) for j in range(matrix.n) if j != example_index]
    return _median(row)


def sprawl(matrix: DistanceMatrix) -> float:
    """Median over the strict upper triangle."""
    if matrix.n < 2:
        raise DegenerateGallery("sprawl needs at least 2 examples")
    return _median([float(v) for v in matrix.upper_triangle()])


@dataclass(frozen=True)
class NotationSummary:
    notation_id: str
    language_id: str
    median_spec_length: float
    sprawl: float
    vocabulary_size: int
    remoteness: dict[str, float] = field(default_factory=dict)


def notation_summary(
    gallery: Gallery,
    notation_id: str,
    cd_matrix: DistanceMatrix | None = None,
    compressor: CompressorConfig = DEFAULT_COMPRESSOR,
) -> NotationSummary:
    from .tokenizer import vocabulary

    if cd_matrix is None:
        cd_matrix = distance_matrix(gallery, notation_id, "cd", compressor)
    cfg = gallery.notation(notation_id)
    remote = {
        e: remoteness(cd_matrix, i) for i, e in enumerate(gallery.config.examples)
    } if cd_matrix.n >= 2 else {}
    return NotationSummary(
        notation_id=notation_id,
        language_id=cfg.language_id,
        median_spec_length=median_spec_length(gallery, notation_id),
        sprawl=sprawl(cd_matrix) if cd_matrix.n >= 2 else 0.0,
        vocabulary_size=vocabulary(gallery, notation_id).unique_count,
        remoteness=remote,
    )


def pearson_upper(a: DistanceMatrix, b: DistanceMatrix) -> float:
    if a.n != b.n or a.example_ids != b.example_ids:
        raise ShapeMismatch("matrices must share example ordering")
    x = a.upper_triangle()
    y = b.upper_triangle()
    if np.std(x) == 0 or np.std(y) == 0:
        raise ValueError("constant matrix has undefined correlation")
    return float(np.corrcoef(x, y)[0, 1])
