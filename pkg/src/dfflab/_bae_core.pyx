# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled root-solver kernels; `_bae_numpy` holds the reference semantics."""
import numpy as np

from libc.math cimport atan, cos, sin, M_PI


def defects(const double[::1] k, const double[::1] lam, const double[::1] I,
            const double[::1] J, long L, double U):
    """Residual vector (N charge rows, then M spin rows).

    The charge-spin arctan table is accumulated along both axes in a single
    pass, and only the upper triangle of the antisymmetric spin-spin table
    is evaluated.
    """
    cdef Py_ssize_t N = k.shape[0]
    cdef Py_ssize_t M = lam.shape[0]
    out_arr = np.empty(N + M)
    col_arr = np.zeros(M)
    cdef double[::1] out = out_arr
    cdef double[::1] col = col_arr
    cdef Py_ssize_t j, a, b
    cdef double s, t, skj
    for j in range(N):
        skj = sin(k[j])
        s = 0.0
        for a in range(M):
            t = 2.0 * atan(4.0 * (lam[a] - skj) / U)
            s += t
            col[a] += t
        out[j] = k[j] * L - s - 2.0 * M_PI * I[j]
    for a in range(M):
        out[N + a] = col[a] - 2.0 * M_PI * J[a]
    for a in range(M):
        for b in range(a + 1, M):
            t = 2.0 * atan(2.0 * (lam[a] - lam[b]) / U)
            out[N + a] -= t
            out[N + b] += t
    return out_arr


def jacobian(const double[::1] k, const double[::1] lam, long L, double U):
    """Dense (N+M) x (N+M) derivative of the defect map."""
    cdef Py_ssize_t N = k.shape[0]
    cdef Py_ssize_t M = lam.shape[0]
    out_arr = np.zeros((N + M, N + M))
    row_arr = np.zeros(M)
    cdef double[:, ::1] out = out_arr
    cdef double[::1] row = row_arr
    cdef Py_ssize_t j, a, b
    cdef double x, t1p, t2p, s, off, ck, skj
    for j in range(N):
        skj = sin(k[j])
        ck = cos(k[j])
        s = 0.0
        for a in range(M):
            x = lam[a] - skj
            t1p = 8.0 * U / (U * U + 16.0 * x * x)
            out[j, N + a] = -t1p
            out[N + a, j] = -t1p * ck
            row[a] += t1p
            s += t1p
        out[j, j] = L + ck * s
    for a in range(M):
        off = 0.0
        for b in range(M):
            if b != a:
                x = lam[a] - lam[b]
                t2p = 16.0 * U / (4.0 * U * U + 16.0 * x * x)
                out[N + a, N + b] = t2p
                off += t2p
        out[N + a, N + a] = row[a] - off
    return out_arr
