"""Compare the compiled edit-distance kernel against the numpy fallback.

Usage: python3 benchmarks/bench_kernels.py [pairs] [max_len]
"""

import sys
import time

import numpy as np

from notascope._kernels import _slow

try:
    from notascope._kernels import _fast
except ImportError:
    _fast = None


def bench(kernel, pairs):
    t0 = time.perf_counter()
    total = 0
    for a, b in pairs:
        total += kernel(a, b)
    return time.perf_counter() - t0, total


def main():
    n_pairs = int(sys.argv[1]) if len(sys.argv) > 1 else 200
    max_len = int(sys.argv[2]) if len(sys.argv) > 2 else 400
    rng = np.random.default_rng(0)
    pairs = [
        (
            rng.integers(0, 50, size=rng.integers(max_len // 2, max_len)).astype(np.int32),
            rng.integers(0, 50, size=rng.integers(max_len // 2, max_len)).astype(np.int32),
        )
        for _ in range(n_pairs)
    ]

    slow_t, slow_sum = bench(_slow.levenshtein_ids, pairs)
    print(f"numpy fallback : {slow_t:8.3f}s  ({n_pairs} pairs, len<{max_len})")
    if _fast is None:
        print("compiled kernel: not built")
        return
    fast_t, fast_sum = bench(_fast.levenshtein_ids, pairs)
    assert fast_sum == slow_sum, "kernels disagree"
    print(f"compiled kernel: {fast_t:8.3f}s  ({slow_t / fast_t:.1f}x faster)")


if __name__ == "__main__":
    main()
