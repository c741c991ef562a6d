"""Higher-order artifacts derived from distance matrices and galleries:
bootstrap distributions, classical MDS embeddings, UPGMA dendrograms,
minimum spanning trees, correlation reports, and cross-notation joins."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateGallery, ShapeMismatch, UnknownMetric, UnknownNotation
from .gallery import Gallery
from .metrics import (
    CompressorConfig,
    DEFAULT_COMPRESSOR,
    DistanceMatrix,
    _median,
    distance_matrix,
    median_spec_length,
    remoteness,
    sprawl,
)
from .tokenizer import gallery_streams

BOOTSTRAP_METRICS = ("median_spec_length", "vocabulary_size", "sprawl")

# PRNG: numpy PCG64; each sample draws from a stream seeded by
# SeedSequence(seed, sample_index) so samples are order-independent
PRNG_NAME = "numpy-pcg64/seedsequence(seed,sample_index)"

BOOTSTRAP_QUANTILES = (0.025, 0.25, 0.5, 0.75, 0.975)


@dataclass(frozen=True)
class BootstrapResult:
    notation_id: str
    metric_name: str
    samples: list[float]
    sample_count: int
    seed: int

    def quantiles(self) -> dict[str, float]:
        qs = np.quantile(np.asarray(self.samples), BOOTSTRAP_QUANTILES)
        return {f"{100 * p:g}%": float(v) for p, v in zip(BOOTSTRAP_QUANTILES, qs)}

    def to_jsonable(self) -> dict:
        return {
            "notation_id": self.notation_id,
            "metric_name": self.metric_name,
            "sample_count": self.sample_count,
            "seed": self.seed,
            "prng": PRNG_NAME,
            "quantiles": self.quantiles(),
            "samples": [round(float(s), 10) for s in self.samples],
        }


def _sample_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, index])))


def bootstrap(
    gallery: Gallery,
    notation_id: str,
    metric_name: str,
    sample_count: int = 1000,
    seed: int = 0,
    compressor: CompressorConfig = DEFAULT_COMPRESSOR,
    cd_matrix: DistanceMatrix | None = None,
) -> BootstrapResult:
    """Plug-in bootstrap of a per-notation aggregate.

    Each sample resamples the notation's n examples with replacement and
    recomputes the aggregate on the multiset. For sprawl, pairs of slots
    that drew the same original example contribute distance 0; other pairs
    reuse the precomputed matrix entry.
    """
    if notation_id not in gallery.notation_ids:
        raise UnknownNotation(notation_id)
    if metric_name not in BOOTSTRAP_METRICS:
        raise UnknownMetric(metric_name)
    if sample_count < 1:
        raise ValueError("sample_count must be >= 1")

    n = len(gallery.config.examples)
    specs = gallery.notation_specs(notation_id)

    if metric_name == "median_spec_length":
        lengths = np.array([s.byte_length for s in specs], dtype=np.float64)

        def statistic(idx: np.ndarray) -> float:
            return _median([float(x) for x in lengths[idx]])

    elif metric_name == "vocabulary_size":
        streams = gallery_streams(gallery, notation_id)
        lexeme_sets = [frozenset(st.lexemes()) for st in streams]
        vocab = sorted(set().union(*lexeme_sets)) if lexeme_sets else []
        index = {lex: k for k, lex in enumerate(vocab)}
        incidence = np.zeros((n, len(vocab)), dtype=bool)
        for i, lexset in enumerate(lexeme_sets):
            for lex in lexset:
                incidence[i, index[lex]] = True

        def statistic(idx: np.ndarray) -> float:
            # duplicates contribute no new lexemes: boolean OR of rows
            return float(incidence[idx].any(axis=0).sum())

    else:  # sprawl
        if cd_matrix is None:
            cd_matrix = distance_matrix(gallery, notation_id, "cd", compressor)
        values = cd_matrix.values
        iu0, iu1 = np.triu_indices(n, k=1)

        def statistic(idx: np.ndarray) -> float:
            if n < 2:
                return 0.0
            # same-slot duplicates contribute distance 0 (the matrix
            # diagonal is already 0, so plain indexing handles it)
            return float(np.median(values[idx[iu0], idx[iu1]]))

    samples = []
    for s in range(sample_count):
        idx = _sample_rng(seed, s).integers(0, n, size=n)
        samples.append(statistic(idx))

    return BootstrapResult(
        notation_id=notation_id,
        metric_name=metric_name,
        samples=samples,
        sample_count=sample_count,
        seed=seed,
    )


@dataclass(frozen=True)
class Embedding2D:
    notation_id: str
    points: dict[str, tuple[float, float]]
    stress: float

    def to_jsonable(self) -> dict:
        return {
            "notation_id": self.notation_id,
            "stress": round(self.stress, 12),
            "points": {e: [round(x, 10), round(y, 10)] for e, (x, y) in self.points.items()},
        }


def mds_embed(matrix: DistanceMatrix) -> Embedding2D:
    """Classical (Torgerson) MDS into 2 dimensions.

    Negative eigenvalues (expected for non-Euclidean dissimilarities) are
    clamped to zero; axis signs are fixed by forcing the first example's
    coordinate non-negative on each axis (next example breaks ties).
    """
    n = matrix.n
    if n < 2:
        raise DegenerateGallery("MDS needs at least 2 examples")
    d = matrix.values
    d2 = d**2
    j = np.eye(n) - np.ones((n, n)) / n
    b = -0.5 * j @ d2 @ j
    eigvals, eigvecs = np.linalg.eigh(b)  # ascending
    order = np.argsort(eigvals)[::-1][:2]
    lam = np.clip(eigvals[order], 0.0, None)
    coords = eigvecs[:, order] * np.sqrt(lam)

    # deterministic sign: first example non-negative per axis, ties broken
    # by the next example with a nonzero coordinate
    for axis in range(2):
        for i in range(n):
            v = coords[i, axis]
            if abs(v) > 1e-12:
                if v < 0:
                    coords[:, axis] = -coords[:, axis]
                break

    emb_d = np.sqrt(((coords[:, None, :] - coords[None, :, :]) ** 2).sum(axis=2))
    iu = np.triu_indices(n, k=1)
    denom = float((d[iu] ** 2).sum())
    stress = float(((d[iu] - emb_d[iu]) ** 2).sum() / denom) if denom > 0 else 0.0

    points = {e: (float(coords[i, 0]), float(coords[i, 1])) for i, e in enumerate(matrix.example_ids)}
    return Embedding2D(notation_id=matrix.notation_id, points=points, stress=stress)


@dataclass(frozen=True)
class Dendrogram:
    notation_id: str
    leaves: tuple[str, ...]  # leaf i has cluster id i
    merges: tuple[tuple[int, int, float, int], ...]  # (a, b, height, new_id)

    def to_jsonable(self) -> dict:
        return {
            "notation_id": self.notation_id,
            "leaves": list(self.leaves),
            "merges": [
                {"a": a, "b": b, "height": round(h, 10), "id": new}
                for a, b, h, new in self.merges
            ],
        }


def cluster(matrix: DistanceMatrix, linkage: str = "average") -> Dendrogram:
    """Agglomerative clustering, average linkage (UPGMA) by default.

    Ties are broken by the lexicographically smallest (min id, max id)
    cluster pair; merge height is the mean inter-cluster distance.
    """
    n = matrix.n
    if n < 2:
        raise DegenerateGallery("clustering needs at least 2 examples")
    if linkage != "average":
        raise ValueError(f"unsupported linkage {linkage!r}")

    # Lance-Williams update for average linkage:
    # d(a+b, k) = (|a| d(a,k) + |b| d(b,k)) / (|a| + |b|)
    sizes: dict[int, int] = {i: 1 for i in range(n)}
    dist: dict[tuple[int, int], float] = {
        (i, j): float(matrix.values[i, j]) for i in range(n) for j in range(i + 1, n)
    }
    merges: list[tuple[int, int, float, int]] = []
    next_id = n
    last_height = 0.0
    while len(sizes) > 1:
        ids = sorted(sizes)
        best: tuple[float, int, int] | None = None
        for ai in range(len(ids)):
            for bi in range(ai + 1, len(ids)):
                a, b = ids[ai], ids[bi]
                mean = dist[(a, b)]
                if best is None or mean < best[0] - 1e-15:
                    best = (mean, a, b)
        assert best is not None
        height, a, b = best
        if height < last_height - 1e-9:
            raise ValueError("non-monotonic merge heights under average linkage")
        last_height = max(last_height, height)
        sa, sb = sizes.pop(a), sizes.pop(b)
        for k in list(sizes):
            da = dist.pop((min(a, k), max(a, k)))
            db = dist.pop((min(b, k), max(b, k)))
            dist[(k, next_id)] = (sa * da + sb * db) / (sa + sb)
        dist.pop((a, b))
        sizes[next_id] = sa + sb
        merges.append((a, b, height, next_id))
        next_id += 1

    return Dendrogram(
        notation_id=matrix.notation_id,
        leaves=matrix.example_ids,
        merges=tuple(merges),
    )


@dataclass(frozen=True)
class SpanningTree:
    notation_id: str
    edges: tuple[tuple[str, str, float], ...]

    @property
    def total_weight(self) -> float:
        return float(sum(w for _, _, w in self.edges))

    def to_jsonable(self) -> dict:
        return {
            "notation_id": self.notation_id,
            "total_weight": round(self.total_weight, 10),
            "edges": [{"a": a, "b": b, "weight": round(w, 10)} for a, b, w in self.edges],
        }


def mst(matrix: DistanceMatrix) -> SpanningTree:
    """Kruskal over the complete graph; ties resolved by (weight, i, j)."""
    n = matrix.n
    if n < 2:
        raise DegenerateGallery("MST needs at least 2 examples")
    edges = sorted(
        ((float(matrix.values[i, j]), i, j) for i in range(n) for j in range(i + 1, n))
    )
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen: list[tuple[str, str, float]] = []
    for w, i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            chosen.append((matrix.example_ids[i], matrix.example_ids[j], w))
            if len(chosen) == n - 1:
                break
    return SpanningTree(notation_id=matrix.notation_id, edges=tuple(chosen))


@dataclass(frozen=True)
class CorrelationReport:
    matrix_a: str
    matrix_b: str
    pearson_r: float
    n_pairs: int
    permutation_p: float | None = None
    permutations: int | None = None

    def to_jsonable(self) -> dict:
        out = {
            "matrix_a": self.matrix_a,
            "matrix_b": self.matrix_b,
            "pearson_r": round(self.pearson_r, 12),
            "n_pairs": self.n_pairs,
        }
        if self.permutation_p is not None:
            out["permutation_p"] = round(self.permutation_p, 12)
            out["permutations"] = self.permutations
        return out


def _pearson(x: np.ndarray, y: np.ndarray) -> float:
    xc = x - x.mean()
    yc = y - y.mean()
    denom = float(np.sqrt((xc**2).sum() * (yc**2).sum()))
    if denom == 0:
        return 0.0
    return float((xc * yc).sum() / denom)


def correlate(
    a: DistanceMatrix,
    b: DistanceMatrix,
    permutations: int | None = None,
    seed: int = 0,
) -> CorrelationReport:
    """Pearson r over paired strict upper triangles, with an optional
    Mantel-style permutation p-value (identity permutation counted)."""
    if a.n != b.n or a.example_ids != b.example_ids:
        raise ShapeMismatch("matrices must share example set and ordering")
    n = a.n
    x = a.upper_triangle()
    y = b.upper_triangle()
    r = _pearson(x, y)

    p = None
    if permutations is not None:
        rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed])))
        hits = 1  # identity permutation
        iu = np.triu_indices(n, k=1)
        for _ in range(permutations):
            perm = rng.permutation(n)
            bp = b.values[np.ix_(perm, perm)]
            rp = _pearson(x, bp[iu])
            if abs(rp) >= abs(r) - 1e-15:
                hits += 1
        p = hits / (permutations + 1)

    return CorrelationReport(
        matrix_a=f"{a.notation_id}/{a.metric_id}",
        matrix_b=f"{b.notation_id}/{b.metric_id}",
        pearson_r=r,
        n_pairs=n * (n - 1) // 2,
        permutation_p=p,
        permutations=permutations,
    )


@dataclass(frozen=True)
class JoinRow:
    example_id: str
    remoteness_a: float
    remoteness_b: float
    length_a: int
    length_b: int


def cross_notation_join(
    gallery: Gallery,
    notation_a: str,
    notation_b: str,
    metric_id: str = "cd",
    compressor: CompressorConfig = DEFAULT_COMPRESSOR,
    matrix_a: DistanceMatrix | None = None,
    matrix_b: DistanceMatrix | None = None,
) -> list[JoinRow]:
    """Per-example join of remoteness and spec length across two notations."""
    for nid in (notation_a, notation_b):
        if nid not in gallery.notation_ids:
            raise UnknownNotation(nid)
    if matrix_a is None:
        matrix_a = distance_matrix(gallery, notation_a, metric_id, compressor)
    if matrix_b is None:
        matrix_b = distance_matrix(gallery, notation_b, metric_id, compressor)
    rows = []
    for i, e in enumerate(gallery.config.examples):
        rows.append(
            JoinRow(
                example_id=e,
                remoteness_a=remoteness(matrix_a, i),
                remoteness_b=remoteness(matrix_b, i),
                length_a=gallery.spec(notation_a, e).byte_length,
                length_b=gallery.spec(notation_b, e).byte_length,
            )
        )
    return rows
