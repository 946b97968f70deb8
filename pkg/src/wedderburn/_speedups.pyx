# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled row-reduction kernel, drop-in replacement for `_pykernels`."""

import numpy as np

BACKEND_NAME = "cython"


cdef long long _modinv(long long a, long long p):
    # extended Euclid; a is nonzero mod p and p is prime
    cdef long long old_r = a % p, r = p
    cdef long long old_s = 1, s = 0
    cdef long long q, tmp
    while r != 0:
        q = old_r / r
        tmp = old_r - q * r
        old_r = r
        r = tmp
        tmp = old_s - q * s
        old_s = s
        s = tmp
    old_s %= p
    if old_s < 0:
        old_s += p
    return old_s


def rref_inplace(M, long long p, Py_ssize_t pivot_cols):
    """Reduced row echelon form of M mod p, in place.

    M must be a C-contiguous int64 2-D array with entries in [0, p).  Pivots
    are searched only within the first `pivot_cols` columns; any remaining
    columns are carried along (augmented systems).  Returns the pivot column
    indices in increasing order.
    """
    cdef long long[:, ::1] A = M
    cdef Py_ssize_t rows = A.shape[0]
    cdef Py_ssize_t cols = A.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, k
    cdef long long piv, inv, factor, v
    pivots = []
    for c in range(pivot_cols):
        if r == rows:
            break
        i = -1
        for j in range(r, rows):
            if A[j, c] != 0:
                i = j
                break
        if i == -1:
            continue
        if i != r:
            for k in range(cols):
                v = A[r, k]
                A[r, k] = A[i, k]
                A[i, k] = v
        piv = A[r, c]
        if piv != 1:
            inv = _modinv(piv, p)
            for k in range(cols):
                A[r, k] = (A[r, k] * inv) % p
        for j in range(rows):
            if j == r:
                continue
            factor = A[j, c]
            if factor == 0:
                continue
            for k in range(cols):
                v = (A[j, k] - factor * A[r, k]) % p
                if v < 0:
                    v += p
                A[j, k] = v
        pivots.append(c)
        r += 1
    return pivots
