"""Pure-numpy fallback for the root-solver kernels.

Mirrors the compiled extension `_bae_core` exactly: `defects` evaluates the
residual of the coupled charge/spin root equations and `jacobian` their
analytic derivative matrix.  Scattering phases are theta_n(x) =
2 atan(4x / (nU)) with theta_n'(x) = 8nU / ((nU)^2 + 16 x^2).
"""
import numpy as np


def defects(k, lam, I, J, L, U):
    """Residual vector (N charge rows, then M spin rows)."""
    d = lam[:, None] - np.sin(k)[None, :]  # (M, N)
    t1 = 2.0 * np.arctan(4.0 * d / U)
    dl = lam[:, None] - lam[None, :]
    t2 = 2.0 * np.arctan(2.0 * dl / U)
    f = k * L - t1.sum(axis=0) - 2.0 * np.pi * I
    g = t1.sum(axis=1) - t2.sum(axis=1) - 2.0 * np.pi * J
    return np.concatenate([f, g])


def jacobian(k, lam, L, U):
    """Dense (N+M) x (N+M) derivative of the defect map."""
    N, M = k.size, lam.size
    d = lam[:, None] - np.sin(k)[None, :]
    t1p = 8.0 * U / (U * U + 16.0 * d * d)
    dl = lam[:, None] - lam[None, :]
    t2p = 16.0 * U / (4.0 * U * U + 16.0 * dl * dl)
    ck = np.cos(k)
    out = np.zeros((N + M, N + M))
    out[:N, :N] = np.diag(L + ck * t1p.sum(axis=0))
    out[:N, N:] = -t1p.T
    out[N:, :N] = -t1p * ck[None, :]
    off = t2p.copy()
    np.fill_diagonal(off, 0.0)
    out[N:, N:] = off + np.diag(t1p.sum(axis=1) - off.sum(axis=1))
    return out
