# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Seidel-style randomized incremental LP core for d <= 3.

Algorithmic twin of _seidel_py.py; see that module for commentary.
"""

from libc.stdlib cimport free, malloc
from libc.math cimport fabs

import numpy as np

cdef double EPS = 1e-9
cdef double BOX = 1e12


cdef void _shuffle(int n, unsigned long long seed, int* idx) noexcept:
    cdef int i, j, tmp
    cdef unsigned long long s
    for i in range(n):
        idx[i] = i
    s = seed * 2862933555777941757ULL + 3037000493ULL
    for i in range(n - 1, 0, -1):
        s = s * 6364136223846793005ULL + 1442695040888963407ULL
        j = <int>((s >> 33) % <unsigned long long>(i + 1))
        tmp = idx[i]; idx[i] = idx[j]; idx[j] = tmp


cdef int _solve_1d(double c0, double* A, double* B, int n, double* xout) noexcept:
    cdef double lo = -BOX
    cdef double hi = BOX
    cdef double a0, v, m
    cdef int i
    for i in range(n):
        a0 = A[i]
        if a0 > 1e-14:
            v = B[i] / a0
            if v < hi:
                hi = v
        elif a0 < -1e-14:
            v = B[i] / a0
            if v > lo:
                lo = v
        elif B[i] < -EPS:
            return 1
    m = 1.0
    if fabs(lo) > m:
        m = fabs(lo)
    if fabs(hi) > m:
        m = fabs(hi)
    if lo > hi + EPS * m:
        return 1
    if c0 > 0.0:
        xout[0] = lo
    elif c0 < 0.0:
        xout[0] = hi
    else:
        v = 0.0
        if v < lo:
            v = lo
        if v > hi:
            v = hi
        xout[0] = v
    return 0


cdef int _solve_rec(int d, double* c, double* RA, double* RB, int* order,
                    int norder, double* x) noexcept:
    cdef int i, ii, oi, oj, j, k, yi, nsub, st
    cdef double bb, lhs, mx, s, ak, ck, pk, qq, smax, val, s2
    cdef double a[3]
    cdef double subc[2]
    cdef double y[2]
    cdef double tmp[2]
    cdef double* SA
    cdef double* SB
    cdef int* sub_ord

    if d == 1:
        SA = <double*>malloc((norder + 1) * sizeof(double))
        SB = <double*>malloc((norder + 1) * sizeof(double))
        for i in range(norder):
            SA[i] = RA[order[i]]
            SB[i] = RB[order[i]]
        st = _solve_1d(c[0], SA, SB, norder, x)
        free(SA)
        free(SB)
        return st

    for j in range(d):
        if c[j] < 0.0:
            x[j] = BOX
        elif c[j] > 0.0:
            x[j] = -BOX
        else:
            x[j] = 0.0

    for i in range(norder):
        oi = order[i]
        bb = RB[oi]
        lhs = 0.0
        mx = 0.0
        for j in range(d):
            a[j] = RA[oi * d + j]
            lhs += a[j] * x[j]
            mx += fabs(a[j] * x[j])
        s = 1.0
        if fabs(bb) > s:
            s = fabs(bb)
        # second term guards float rounding of lhs at box-corner magnitudes
        if lhs <= bb + EPS * s + 1e-14 * mx:
            continue
        # the new optimum lies on a.x = bb: eliminate the best-conditioned variable
        k = 0
        for j in range(1, d):
            if fabs(a[j]) > fabs(a[k]):
                k = j
        if fabs(a[k]) < 1e-14:
            return 1
        ak = a[k]
        SA = <double*>malloc((i + 1) * (d - 1) * sizeof(double))
        SB = <double*>malloc((i + 1) * sizeof(double))
        nsub = 0
        for ii in range(i):
            oj = order[ii]
            pk = RA[oj * d + k]
            qq = RB[oj] - pk * bb / ak
            yi = 0
            smax = 0.0
            for j in range(d):
                if j == k:
                    continue
                val = RA[oj * d + j] - pk * a[j] / ak
                tmp[yi] = val
                if fabs(val) > smax:
                    smax = fabs(val)
                yi += 1
            if smax < 1e-14:
                if qq < -EPS:
                    free(SA)
                    free(SB)
                    return 1
                continue
            for j in range(d - 1):
                SA[nsub * (d - 1) + j] = tmp[j] / smax
            SB[nsub] = qq / smax
            nsub += 1
        ck = c[k]
        yi = 0
        for j in range(d):
            if j != k:
                subc[yi] = c[j] - ck * a[j] / ak
                yi += 1
        sub_ord = <int*>malloc((nsub + 1) * sizeof(int))
        for j in range(nsub):
            sub_ord[j] = j
        st = _solve_rec(d - 1, subc, SA, SB, sub_ord, nsub, y)
        free(SA)
        free(SB)
        free(sub_ord)
        if st == 1:
            return 1
        yi = 0
        for j in range(d):
            if j == k:
                x[j] = 0.0
            else:
                x[j] = y[yi]
                yi += 1
        s2 = 0.0
        for j in range(d):
            if j != k:
                s2 += a[j] * x[j]
        x[k] = (bb - s2) / ak
    return 0


def seidel_solve(A, b, c, seed):
    """Minimize c.x s.t. A x <= b (normalized rows); see _seidel_py.seidel_solve."""
    cdef double[:, ::1] Av = np.ascontiguousarray(A, dtype=np.float64).reshape(len(b), -1) \
        if len(b) else np.zeros((0, len(c)))
    cdef double[::1] bv = np.ascontiguousarray(b, dtype=np.float64)
    cdef double[::1] cv = np.ascontiguousarray(c, dtype=np.float64)
    cdef int m = bv.shape[0]
    cdef int d = cv.shape[0]
    cdef int i, j, st
    cdef double mx
    cdef double x[3]
    cdef double cc[3]
    cdef double* RA = <double*>malloc((m + 2 * d) * d * sizeof(double))
    cdef double* RB = <double*>malloc((m + 2 * d) * sizeof(double))
    cdef int* order = <int*>malloc((m + 2 * d) * sizeof(int))
    cdef int* shuf = <int*>malloc((m + 1) * sizeof(int))
    try:
        for i in range(m):
            for j in range(d):
                RA[i * d + j] = Av[i, j]
            RB[i] = bv[i]
        for i in range(2 * d):
            for j in range(d):
                RA[(m + i) * d + j] = 0.0
            RA[(m + i) * d + (i >> 1)] = 1.0 if (i & 1) == 0 else -1.0
            RB[m + i] = BOX
            order[i] = m + i
        _shuffle(m, <unsigned long long>seed, shuf)
        for i in range(m):
            order[2 * d + i] = shuf[i]
        for j in range(d):
            cc[j] = cv[j]
        st = _solve_rec(d, cc, RA, RB, order, m + 2 * d, x)
    finally:
        free(RA)
        free(RB)
        free(order)
        free(shuf)
    if st == 1:
        return 1, None
    mx = 0.0
    for j in range(d):
        if fabs(x[j]) > mx:
            mx = fabs(x[j])
    if mx >= 0.5 * BOX:
        return 2, None
    return 0, [x[j] for j in range(d)]
