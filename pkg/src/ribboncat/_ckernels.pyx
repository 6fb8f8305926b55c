# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer hot kernels; mirrors ``_pykernels`` result for result."""

import numpy as np

cimport numpy as cnp
from libc.math cimport sqrt

cnp.import_array()

BACKEND = "cython"

ctypedef long long i64


cdef inline i64 _isqrt(i64 n):
    cdef i64 r = <i64>sqrt(<double>n)
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r


def associativity_violation(N):
    """First (a, b, c, d) in lexicographic order where (ab)c and a(bc) differ at d."""
    cdef const i64[:, :, ::1] T = np.ascontiguousarray(N, dtype=np.int64)
    cdef Py_ssize_t r = T.shape[0]
    cdef Py_ssize_t a, b, c, d, e
    cdef i64 lhs, rhs
    for a in range(r):
        for b in range(r):
            for c in range(r):
                for d in range(r):
                    lhs = 0
                    rhs = 0
                    for e in range(r):
                        lhs += T[a, b, e] * T[e, c, d]
                        rhs += T[b, c, e] * T[a, e, d]
                    if lhs != rhs:
                        return int(a), int(b), int(c), int(d), int(lhs), int(rhs)
    return None


def extended_hom_matrix(N, t_labels, t_dims):
    """M[x][y] = sum_k d_k N[t_k][x][y]."""
    cdef const i64[:, :, ::1] T = np.ascontiguousarray(N, dtype=np.int64)
    cdef Py_ssize_t r = T.shape[0]
    out = np.zeros((r, r), dtype=np.int64)
    cdef i64[:, ::1] M = out
    cdef Py_ssize_t x, y, k
    cdef i64 dk
    for lab, dim in zip(t_labels, t_dims):
        k = int(lab)
        dk = int(dim)
        for x in range(r):
            for y in range(r):
                M[x, y] += dk * T[k, x, y]
    return out


cdef class _GramSearch:
    cdef i64[:, ::1] M
    cdef i64[:, ::1] m
    cdef i64[::1] order
    cdef i64[:, ::1] dots
    cdef Py_ssize_t r
    cdef Py_ssize_t limit
    cdef public list solutions
    cdef public bint truncated

    def __init__(self, M, row_order, limit):
        self.M = np.array(M, dtype=np.int64, order="C")
        self.r = self.M.shape[0]
        width = int(np.trace(np.asarray(M))) + 1
        self.m = np.zeros((self.r, width), dtype=np.int64)
        self.order = np.asarray(list(row_order), dtype=np.int64)
        self.dots = np.zeros((self.r, self.r), dtype=np.int64)
        self.limit = limit
        self.solutions = []
        self.truncated = False

    cdef bint record(self, Py_ssize_t ncols):
        cdef Py_ssize_t i, j
        self.solutions.append([tuple(int(self.m[i, j]) for j in range(ncols)) for i in range(self.r)])
        if len(self.solutions) >= self.limit:
            self.truncated = True
            return True
        return False

    cdef bint search(self, Py_ssize_t pos, Py_ssize_t ncols):
        if pos == self.r:
            return self.record(ncols)
        cdef Py_ssize_t q
        for q in range(pos):
            self.dots[pos, q] = 0
        return self.assign(pos, 0, 0, ncols)

    cdef bint assign(self, Py_ssize_t pos, Py_ssize_t col, i64 norm, Py_ssize_t ncols):
        cdef Py_ssize_t i = self.order[pos]
        cdef Py_ssize_t q, j
        cdef i64 v, cap, diag = self.M[i, i]
        cdef bint ok
        if col == ncols:
            for q in range(pos):
                j = self.order[q]
                if self.dots[pos, q] != self.M[i, j]:
                    return False
            return self.fresh(pos, ncols, ncols, diag - norm, diag - norm)
        cap = _isqrt(diag - norm)
        v = cap
        while v >= 0:
            self.m[i, col] = v
            ok = True
            if v:
                for q in range(pos):
                    j = self.order[q]
                    self.dots[pos, q] += v * self.m[j, col]
                for q in range(pos):
                    j = self.order[q]
                    if self.dots[pos, q] > self.M[i, j]:
                        ok = False
                        break
            if ok and self.assign(pos, col + 1, norm + v * v, ncols):
                self.m[i, col] = 0
                return True
            if v:
                for q in range(pos):
                    j = self.order[q]
                    self.dots[pos, q] -= v * self.m[j, col]
            v -= 1
        self.m[i, col] = 0
        return False

    cdef bint fresh(self, Py_ssize_t pos, Py_ssize_t ncols, Py_ssize_t at, i64 residual, i64 cap):
        # Nonincreasing positive parts whose squares sum to residual, opened as new columns.
        cdef Py_ssize_t i = self.order[pos]
        cdef i64 v, top
        cdef bint stop
        if residual == 0:
            return self.search(pos + 1, at)
        top = _isqrt(residual)
        if cap < top:
            top = cap
        v = top
        while v > 0:
            self.m[i, at] = v
            stop = self.fresh(pos, ncols, at + 1, residual - v * v, v)
            self.m[i, at] = 0
            if stop:
                return True
            v -= 1
        return False


def gram_factorizations(M, row_order, limit):
    """All nonnegative integer m with m m^T = M, up to column permutation.

    Same enumeration order and output format as the pure-Python kernel.
    """
    s = _GramSearch(M, row_order, int(limit))
    s.search(0, 0)
    return s.solutions, bool(s.truncated)
