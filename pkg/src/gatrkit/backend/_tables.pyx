# cython: boundscheck=False, wraparound=False, cdivision=True
"""Sparse blade-table contraction kernel.

Tables of G(3,0,1) have at most 16 components and ~200 nonzero entries, so
the kernel keeps one row of each operand in a small local buffer and runs
the sparse multiply-accumulate over the nonzero (i, j, k, sign) entries.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def table_bilinear(double[:, ::1] x, double[:, ::1] y,
                   int[::1] nz_i, int[::1] nz_j, int[::1] nz_k,
                   double[::1] nz_s, double[:, ::1] out):
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t d = x.shape[1]
    cdef Py_ssize_t nnz = nz_i.shape[0]
    cdef Py_ssize_t r, t
    cdef double xr[32]
    cdef double yr[32]
    cdef double acc[32]
    if d > 32:
        raise ValueError("table dimension exceeds kernel buffer")
    with nogil:
        for r in range(n):
            for t in range(d):
                xr[t] = x[r, t]
                yr[t] = y[r, t]
                acc[t] = 0.0
            for t in range(nnz):
                acc[nz_k[t]] += nz_s[t] * xr[nz_i[t]] * yr[nz_j[t]]
            for t in range(d):
                out[r, t] = acc[t]
