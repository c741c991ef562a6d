import itertools
import random
import zlib

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from notascope.errors import DegenerateGallery, UnknownMetric, UnknownNotation
from notascope.gallery import Spec, load_gallery
from notascope.metrics import (
    CompressorConfig,
    DistanceMatrix,
    compress,
    compression_distance,
    compression_distance_texts,
    distance_matrix,
    lexeme_levenshtein,
    median_spec_length,
    pearson_upper,
    remoteness,
    spec_length,
    sprawl,
)

from .conftest import make_tiny_gallery


def brute_force_ld(a, b):
    """Independent oracle: recursive definition with memoization."""
    from functools import lru_cache

    @lru_cache(maxsize=None)
    def go(i, j):
        if i == 0:
            return j
        if j == 0:
            return i
        cost = 0 if a[i - 1] == b[j - 1] else 1
        return min(go(i - 1, j) + 1, go(i, j - 1) + 1, go(i - 1, j - 1) + cost)

    return go(len(a), len(b))


# -- spec_length / medians -------------------------------------------------


def test_spec_length_cases():
    def mk(text):
        return Spec("n", "e", text, text)

    assert spec_length(mk("")) == 0
    assert spec_length(mk("abc\n")) == 4
    assert spec_length(mk("é\n")) == 3


def test_median_spec_length(tmp_path):
    root = make_tiny_gallery(
        tmp_path / "g", {"na": {"a": "x" * 9, "b": "y" * 19, "c": "z" * 29}}
    )
    g = load_gallery(root)
    # canonicalization appends a newline: lengths 10, 20, 30
    assert median_spec_length(g, "na") == 20


def test_median_even_count(tmp_path):
    root = make_tiny_gallery(tmp_path / "g", {"na": {"a": "x" * 9, "b": "y" * 19}})
    assert median_spec_length(load_gallery(root), "na") == 15


def test_median_against_sort_oracle(sample_gallery):
    for nid in sample_gallery.notation_ids:
        lengths = sorted(s.byte_length for s in sample_gallery.notation_specs(nid))
        k = len(lengths)
        expect = lengths[k // 2] if k % 2 else (lengths[k // 2 - 1] + lengths[k // 2]) / 2
        assert median_spec_length(sample_gallery, nid) == expect


def test_median_unknown_notation(sample_gallery):
    with pytest.raises(UnknownNotation):
        median_spec_length(sample_gallery, "nope")


# -- token levenshtein -----------------------------------------------------


def test_paper_single_token_pairs():
    assert lexeme_levenshtein(["geom_point"], ["geom_line"]) == 1
    assert lexeme_levenshtein(["geom_point"], ["facet_wrap"]) == 1


def test_identical_streams():
    assert lexeme_levenshtein(["a", "b", "c"], ["a", "b", "c"]) == 0


def test_deletion():
    assert lexeme_levenshtein(["a", "b", "c"], ["a", "c"]) == 1


def test_against_brute_force_small():
    alphabet = ["x", "y", "z"]
    rng = random.Random(42)
    for _ in range(300):
        a = [rng.choice(alphabet) for _ in range(rng.randint(0, 4))]
        b = [rng.choice(alphabet) for _ in range(rng.randint(0, 4))]
        assert lexeme_levenshtein(a, b) == brute_force_ld(tuple(a), tuple(b))


def test_metric_axioms_exhaustive():
    # all sequences of length <= 3 over a 2-symbol alphabet
    seqs = [
        tuple(s)
        for k in range(4)
        for s in itertools.product("ab", repeat=k)
    ]
    d = {(s, t): lexeme_levenshtein(list(s), list(t)) for s in seqs for t in seqs}
    for s in seqs:
        for t in seqs:
            assert d[(s, t)] >= 0
            assert (d[(s, t)] == 0) == (s == t)
            assert d[(s, t)] == d[(t, s)]
    for s in seqs:
        for t in seqs:
            for u in seqs:
                assert d[(s, u)] <= d[(s, t)] + d[(t, u)]


def test_fast_and_slow_kernels_agree():
    from notascope._kernels import _slow

    try:
        from notascope._kernels import _fast
    except ImportError:
        pytest.skip("compiled kernel not built")
    rng = np.random.default_rng(7)
    for _ in range(50):
        a = rng.integers(0, 5, size=rng.integers(0, 30)).astype(np.int32)
        b = rng.integers(0, 5, size=rng.integers(0, 30)).astype(np.int32)
        assert _fast.levenshtein_ids(a, b) == _slow.levenshtein_ids(a, b)


# -- compression -----------------------------------------------------------


def test_compress_empty_deterministic():
    c1 = compress(b"")
    c2 = compress(b"")
    assert c1 == c2
    assert c1 == len(zlib.compress(b"", 9))


@settings(max_examples=50, deadline=None)
@given(st.binary(min_size=0, max_size=512))
def test_compress_monotone_under_extension(data):
    assert compress(data) <= compress(data + data)


def test_compress_redundancy():
    repeated = b"a" * 1024
    random_bytes = np.random.default_rng(0).bytes(1024)
    assert compress(repeated) < compress(random_bytes)


def test_lzma_compressor():
    cfg = CompressorConfig("lzma", 6)
    assert compress(b"hello world" * 20, cfg) < len(b"hello world" * 20)


def test_unknown_compressor():
    from notascope.errors import CompressorUnavailable

    with pytest.raises(CompressorUnavailable):
        compress(b"x", CompressorConfig("zstd", 1))


def test_cd_paper_values():
    assert compression_distance_texts("geom_point", "geom_line") == 7
    assert compression_distance_texts("geom_point", "facet_wrap") == 10


def test_cd_self_is_zero():
    a = Spec("n", "e", "text", "text\n")
    assert compression_distance(a, a) == 0.0


def test_cd_symmetric_by_construction(sample_gallery):
    g = sample_gallery
    a = g.spec("r-gg", "scatter")
    b = g.spec("r-gg", "heatmap")
    assert compression_distance(a, b, gallery=g) == compression_distance(b, a, gallery=g)


def test_cd_nonnegative_clamp():
    # single characters: joint compression can cost less than header overhead
    assert compression_distance_texts("a", "b") >= 0


# -- distance matrices -----------------------------------------------------


def test_matrix_single_example(tmp_path):
    g = load_gallery(make_tiny_gallery(tmp_path / "g", {"na": {"only": "x"}}))
    m = distance_matrix(g, "na", "cd")
    assert m.n == 1
    assert m.values[0, 0] == 0


def test_matrix_cells_match_pairwise_calls(tmp_path):
    g = load_gallery(
        make_tiny_gallery(
            tmp_path / "g",
            {"na": {"a": "the quick brown fox", "b": "the slow brown dog", "c": "completely different text here"}},
        )
    )
    m = distance_matrix(g, "na", "cd")
    ex = list(g.config.examples)
    for i, j in itertools.combinations(range(3), 2):
        expect = compression_distance(g.spec("na", ex[i]), g.spec("na", ex[j]), gallery=g)
        assert m.values[i, j] == expect


def test_matrix_invariants(sample_gallery):
    for nid in sample_gallery.notation_ids:
        for metric in ("cd", "token_ld"):
            m = distance_matrix(sample_gallery, nid, metric)
            assert np.array_equal(m.values, m.values.T)
            assert np.all(np.diag(m.values) == 0)
            assert np.all(m.values >= 0)
            assert np.all(np.isfinite(m.values))


def test_matrix_unknown_metric(sample_gallery):
    with pytest.raises(UnknownMetric):
        distance_matrix(sample_gallery, "r-gg", "nope")


# -- remoteness / sprawl ---------------------------------------------------


def _matrix_from(values):
    n = len(values)
    return DistanceMatrix("na", "cd", tuple(f"e{i}" for i in range(n)), np.asarray(values, dtype=float))


def test_remoteness_cases():
    m = _matrix_from([[0, 2, 4], [2, 0, 6], [4, 6, 0]])
    assert remoteness(m, 0) == 3  # {2,4} -> 3
    m4 = _matrix_from([[0, 2, 4, 6], [2, 0, 1, 1], [4, 1, 0, 1], [6, 1, 1, 0]])
    assert remoteness(m4, 0) == 4  # {2,4,6} -> 4


def test_sprawl_cases():
    m = _matrix_from([[0, 2, 4], [2, 0, 6], [4, 6, 0]])
    assert sprawl(m) == 4
    m2 = _matrix_from([[0, 5], [5, 0]])
    assert sprawl(m2) == 5


def test_degenerate_gallery():
    m = _matrix_from([[0]])
    with pytest.raises(DegenerateGallery):
        remoteness(m, 0)
    with pytest.raises(DegenerateGallery):
        sprawl(m)


def test_identical_specs_zero_remoteness(tmp_path):
    g = load_gallery(
        make_tiny_gallery(tmp_path / "g", {"na": {"a": "same text", "b": "same text", "c": "same text"}})
    )
    m = distance_matrix(g, "na", "cd")
    for i in range(3):
        assert remoteness(m, i) == 0


def test_sprawl_against_flatten_oracle(sample_gallery):
    for nid in sample_gallery.notation_ids:
        m = distance_matrix(sample_gallery, nid, "cd")
        flat = sorted(m.values[i, j] for i in range(m.n) for j in range(i + 1, m.n))
        k = len(flat)
        expect = flat[k // 2] if k % 2 else (flat[k // 2 - 1] + flat[k // 2]) / 2
        assert sprawl(m) == expect


def test_remoteness_within_row_bounds(sample_gallery):
    m = distance_matrix(sample_gallery, "json-vl", "cd")
    for i in range(m.n):
        row = [m.values[i, j] for j in range(m.n) if j != i]
        assert min(row) <= remoteness(m, i) <= max(row)


def test_ld_cd_correlation(sample_gallery):
    for nid in sample_gallery.notation_ids:
        cd = distance_matrix(sample_gallery, nid, "cd")
        ld = distance_matrix(sample_gallery, nid, "token_ld")
        assert pearson_upper(cd, ld) >= 0.8
