# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot loops.  Same contracts as ``_fallback``; int64 arithmetic only,
so callers must keep coefficient growth below 2**62 (``kernels`` checks)."""

import numpy as np


cdef inline long long _gcd(long long a, long long b) nogil:
    cdef long long r
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        r = a % b
        a = b
        b = r
    return a


def gcd_histogram(long long n, int k):
    cdef long long[::1] hist = np.zeros(n + 1, dtype=np.int64)
    if k == 0:
        hist[n] = 1
        return [int(h) for h in hist]
    cdef long long[::1] digits = np.zeros(k, dtype=np.int64)
    cdef long long[::1] g = np.zeros(k + 1, dtype=np.int64)
    # gcd of the last coordinate against each possible partial gcd, precomputed
    cdef long long[:, ::1] last = np.zeros((n + 1, n), dtype=np.int64)
    cdef long long x, gk
    cdef int i, level = 0
    for gk in range(1, n + 1):
        if n % gk == 0:
            for x in range(n):
                last[gk, x] = _gcd(gk, x)
    g[0] = n
    with nogil:
        while True:
            for i in range(level, k - 1):
                g[i + 1] = _gcd(g[i], digits[i])
            gk = g[k - 1]
            for x in range(n):
                hist[last[gk, x]] += 1
            i = k - 2
            while i >= 0:
                digits[i] += 1
                if digits[i] < n:
                    break
                digits[i] = 0
                i -= 1
            if i < 0:
                break
            level = i
    return [int(h) for h in hist]


cdef void _apply_generator(long long[:, ::1] src, long long[:, ::1] dst, int gi,
                           int[:, ::1] right, unsigned char[:, ::1] longer,
                           int lo, int hi) nogil:
    # dst = src · T_{gi+1}; entries of src live in columns [lo, hi)
    cdef int nperm = src.shape[0]
    cdef int width = src.shape[1]
    cdef int w, ws, e
    cdef int dlo = lo - 1 if lo > 0 else 0
    cdef int dhi = hi + 1 if hi < width else width
    for w in range(nperm):
        for e in range(dlo, dhi):
            dst[w, e] = 0
    for w in range(nperm):
        ws = right[w, gi]
        if longer[w, gi]:
            for e in range(lo, hi):
                dst[ws, e] += src[w, e]
        else:
            for e in range(lo, hi):
                dst[ws, e] += src[w, e]
                dst[w, e + 1] += src[w, e]
                dst[w, e - 1] -= src[w, e]


def hecke_product_dense(long long[:, ::1] X, long long[:, ::1] Y,
                        int[:, ::1] right, unsigned char[:, ::1] longer,
                        int[::1] order, int[::1] gen, int[::1] depth,
                        unsigned char[::1] needed, int max_length):
    """Dense product.  Row w of X holds the coefficient of T_w, column c the
    exponent x_low + c.  The result row w, column c is exponent
    x_low + y_low - max_length + c."""
    cdef int nperm = X.shape[0]
    cdef int dx = X.shape[1]
    cdef int dy = Y.shape[1]
    cdef int L = max_length
    cdef int width = dx + 2 * L
    stack_arr = np.zeros((L + 1, nperm, width), dtype=np.int64)
    cdef long long[:, :, ::1] stack = stack_arr
    result_arr = np.zeros((nperm, width + dy - 1), dtype=np.int64)
    cdef long long[:, ::1] R = result_arr
    cdef int idx, v, d, w, e, f, lo, hi
    cdef long long c
    cdef bint has_y
    for w in range(nperm):
        for e in range(dx):
            stack[0, w, L + e] = X[w, e]
    with nogil:
        for idx in range(nperm):
            v = order[idx]
            if not needed[v]:
                continue
            d = depth[v]
            if d > 0:
                _apply_generator(stack[d - 1], stack[d], gen[v] - 1, right, longer,
                                 L - d + 1, L + dx + d - 1)
            lo = L - d
            hi = L + dx + d
            has_y = False
            for f in range(dy):
                if Y[v, f] != 0:
                    has_y = True
                    break
            if not has_y:
                continue
            for f in range(dy):
                c = Y[v, f]
                if c == 0:
                    continue
                for w in range(nperm):
                    for e in range(lo, hi):
                        R[w, e + f] += c * stack[d, w, e]
    return result_arr
