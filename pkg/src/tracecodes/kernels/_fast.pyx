# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: codeword-weight enumeration and character-sum histograms."""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND_NAME = "fast"


def weight_counts(gen, int p):
    """Hamming-weight histogram over all p^k codewords of a k x n generator.

    Walks the messages with a mixed-radix odometer, adding one generator row
    per digit change, so each step costs O(n * p/(p-1)) instead of O(n * k).
    """
    cdef cnp.ndarray[cnp.int64_t, ndim=2, mode="c"] g = \
        np.ascontiguousarray(np.asarray(gen, dtype=np.int64) % p)
    cdef Py_ssize_t k = g.shape[0]
    cdef Py_ssize_t n = g.shape[1]
    cdef cnp.ndarray[cnp.int64_t, ndim=1] counts = np.zeros(n + 1, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] cw = np.zeros(n, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] digits = np.zeros(k, dtype=np.int64)
    cdef cnp.int64_t[:, ::1] gv = g
    cdef cnp.int64_t[::1] cwv = cw
    cdef cnp.int64_t[::1] dig = digits
    cdef cnp.int64_t[::1] cnts = counts

    cdef Py_ssize_t total = 1
    cdef Py_ssize_t i, j, step, row
    for i in range(k):
        total *= p

    cdef cnp.int64_t w = 0
    cdef cnp.int64_t v
    cnts[0] += 1  # zero message
    for step in range(1, total):
        row = 0
        while True:
            # digit `row` increments by one; add the matching generator row
            for j in range(n):
                v = cwv[j]
                if v != 0:
                    w -= 1
                v += gv[row, j]
                if v >= p:
                    v -= p
                cwv[j] = v
                if v != 0:
                    w += 1
            dig[row] += 1
            if dig[row] == p:
                dig[row] = 0
                row += 1
            else:
                break
        cnts[w] += 1
    return counts


def char_histograms(base, rot, int p):
    """Exponent histograms of base[a] + rot[(a+b) mod L] over a, for every b."""
    cdef cnp.ndarray[cnp.int64_t, ndim=1, mode="c"] b_arr = \
        np.ascontiguousarray(np.asarray(base, dtype=np.int64))
    cdef cnp.ndarray[cnp.int64_t, ndim=1, mode="c"] r_arr = \
        np.ascontiguousarray(np.asarray(rot, dtype=np.int64))
    cdef Py_ssize_t L = b_arr.shape[0]
    cdef cnp.ndarray[cnp.int64_t, ndim=1, mode="c"] rot2 = np.concatenate([r_arr, r_arr])
    cdef cnp.ndarray[cnp.int64_t, ndim=2] out = np.zeros((L, p), dtype=np.int64)
    cdef cnp.int64_t[::1] bv = b_arr
    cdef cnp.int64_t[::1] rv = rot2
    cdef cnp.int64_t[:, ::1] ov = out
    cdef Py_ssize_t a, b
    cdef cnp.int64_t e
    for b in range(L):
        for a in range(L):
            e = bv[a] + rv[a + b]
            if e >= p:
                e -= p
            ov[b, e] += 1
    return out
