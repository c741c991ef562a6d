"""Pure-Python/numpy fallback for the edit-distance kernel.

Vectorizes the DP row-wise; the left-neighbor dependency is resolved with
the min-accumulate trick (min over k<=j of m[k] + (j-k) equals
arange + running-min of m - arange).
"""

from __future__ import annotations

import numpy as np

BACKEND = "numpy"


def levenshtein_ids(a: np.ndarray, b: np.ndarray) -> int:
    n, m = len(a), len(b)
    if n == 0:
        return m
    if m == 0:
        return n
    if m > n:
        a, b = b, a
        n, m = m, n
    prev = np.arange(m + 1, dtype=np.int64)
    ar = np.arange(m + 1, dtype=np.int64)
    cand = np.empty(m + 1, dtype=np.int64)
    for i in range(1, n + 1):
        cand[0] = i
        np.minimum(prev[1:] + 1, prev[:-1] + (b != a[i - 1]), out=cand[1:])
        # resolve the sequential "insert from the left" chain
        prev = np.minimum.accumulate(cand - ar) + ar
    return int(prev[m])
