# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled sequence-edit-distance kernel.

Operates on int32 id sequences (lexemes interned by the caller); one DP
row is kept in memory, giving O(min(n,m)) space and a tight C inner loop.
"""

from libc.stdlib cimport free, malloc

BACKEND = "cython"


def levenshtein_ids(int[:] a, int[:] b):
    """Unit-cost edit distance between two int id sequences."""
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t m = b.shape[0]
    if n == 0:
        return m
    if m == 0:
        return n
    cdef int[:] s = a
    cdef int[:] t = b
    if m > n:
        s, t = t, s
        n, m = m, n
    cdef Py_ssize_t i, j
    cdef int cost, above, left, diag, best
    cdef int* row = <int*> malloc((m + 1) * sizeof(int))
    if row == NULL:
        raise MemoryError()
    try:
        for j in range(m + 1):
            row[j] = <int> j
        for i in range(1, n + 1):
            diag = row[0]
            row[0] = <int> i
            for j in range(1, m + 1):
                cost = 0 if s[i - 1] == t[j - 1] else 1
                above = row[j] + 1
                left = row[j - 1] + 1
                best = diag + cost
                if above < best:
                    best = above
                if left < best:
                    best = left
                diag = row[j]
                row[j] = best
        return row[m]
    finally:
        free(row)
