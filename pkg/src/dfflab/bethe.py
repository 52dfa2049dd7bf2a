"""Ground-state root solver for the half-filled 1D Hubbard ring.

The ground state in a fixed (N electrons, M down spins) sector is encoded by
N charge rapidities k_j and M spin rapidities lambda_a solving the coupled
transcendental system

    k_j L  = 2 pi I_j + sum_a theta_1(lambda_a - sin k_j)
    sum_j theta_1(lambda_a - sin k_j) = 2 pi J_a + sum_b theta_2(lambda_a - lambda_b)

with theta_n(x) = 2 atan(4x / (nU)) and quantum numbers I_j, J_a that are
consecutive, symmetric around zero, and integer or half-odd depending on the
sector parities.  Solving proceeds by a per-variable bisection bootstrap (each
defect is monotone in its own rapidity at the large-U starting point) followed
by a damped Newton iteration with the analytic Jacobian; sweeps in U descend
from the analytically known large-U regime with warm starts.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import kernels
from .density import DensityDistribution, FidelityCurve, FidelityRecord, fidelity, susceptibility_from_fidelity, susceptibility_from_pair
from .errors import (
    ConfigurationError,
    NonConvergenceError,
    NumericFailureError,
    PartialResultError,
    ValidationError,
)

__all__ = [
    "HubbardParams",
    "QuantumNumbers",
    "BetheRoots",
    "DensityOfStates",
    "ground_state_quantum_numbers",
    "solve_bae",
    "continuation_sweep",
    "energy",
    "density_of_state",
    "resample_to_grid",
    "hubbard_dff_from_roots",
    "hubbard_dff_sweep",
]

RESIDUAL_CAP = 1e-10
ANTISYMMETRY_TOL = 1e-10


@dataclass(frozen=True)
class HubbardParams:
    """Ring of L sites, N electrons, M down spins, on-site repulsion U."""

    L: int
    N: int
    M: int
    U: float

    def __post_init__(self):
        if self.L < 1 or self.N < 1 or self.M < 1:
            raise ValidationError("L, N and M must be positive")
        if self.N > self.L:
            raise ValidationError("N must not exceed L")
        if 2 * self.M > self.N:
            raise ValidationError("M must not exceed N/2")
        if not self.U > 0:
            raise ValidationError("U must be positive (the U = 0 limit is approached, never solved)")


def _is_integer_valued(x: np.ndarray) -> bool:
    return bool(np.all(x == np.round(x)))


def _is_half_odd_valued(x: np.ndarray) -> bool:
    return bool(np.all(x + 0.5 == np.round(x + 0.5)) and not np.any(x == np.round(x)))


def _check_run(x: np.ndarray, name: str) -> None:
    if x.ndim != 1 or x.size == 0:
        raise ValidationError(f"{name} must be a non-empty vector")
    if x.size > 1 and not np.all(np.diff(x) == 1.0):
        raise ValidationError(f"{name} must be consecutive with unit spacing")
    if abs(float(x.sum())) != 0.0:
        raise ValidationError(f"{name} must be symmetric around zero")


@dataclass(frozen=True)
class QuantumNumbers:
    """Consecutive symmetric charge (I) and spin (J) quantum numbers.

    I entries are integers when M is even and half-odd integers when M is
    odd; J entries are integers when N - M is odd and half-odd integers when
    N - M is even (N = len(I), M = len(J)).
    """

    I: np.ndarray
    J: np.ndarray

    def __post_init__(self):
        I = np.asarray(self.I, dtype=float)
        J = np.asarray(self.J, dtype=float)
        _check_run(I, "I")
        _check_run(J, "J")
        N, M = I.size, J.size
        if M % 2 == 0:
            if not _is_integer_valued(I):
                raise ValidationError("I must be integers when M is even")
        elif not _is_half_odd_valued(I):
            raise ValidationError("I must be half-odd integers when M is odd")
        if (N - M) % 2 == 1:
            if not _is_integer_valued(J):
                raise ValidationError("J must be integers when N - M is odd")
        elif not _is_half_odd_valued(J):
            raise ValidationError("J must be half-odd integers when N - M is even")
        I.flags.writeable = False
        J.flags.writeable = False
        object.__setattr__(self, "I", I)
        object.__setattr__(self, "J", J)


def ground_state_quantum_numbers(L: int, N: int, M: int) -> QuantumNumbers:
    """Centered consecutive runs I (length N) and J (length M).

    A centered run of even length is half-odd and of odd length is integer,
    so the required character is only attainable when N is even and M is odd;
    other sectors are rejected with the violated rule named.
    """
    if N > L:
        raise ConfigurationError(f"N={N} exceeds L={L}")
    if M < 1 or 2 * M > N:
        raise ConfigurationError(f"M={M} outside 1..N/2 for N={N}")
    problems = []
    if (M % 2 == 0) != (N % 2 == 1):
        want = "integers" if M % 2 == 0 else "half-odd integers"
        problems.append(
            f"I must be {want} for M={M}, but a symmetric consecutive run of length N={N} is not"
        )
    if ((N - M) % 2 == 1) != (M % 2 == 1):
        want = "integers" if (N - M) % 2 == 1 else "half-odd integers"
        problems.append(
            f"J must be {want} for N-M={N - M}, but a symmetric consecutive run of length M={M} is not"
        )
    if problems:
        raise ConfigurationError(
            "no symmetric consecutive quantum numbers exist for "
            f"(L={L}, N={N}, M={M}): " + "; ".join(problems)
        )
    I = np.arange(N) - (N - 1) / 2.0
    J = np.arange(M) - (M - 1) / 2.0
    return QuantumNumbers(I, J)


@dataclass(frozen=True)
class BetheRoots:
    """Converged rapidities: k (charge, radians) and lam (spin)."""

    k: np.ndarray
    lam: np.ndarray
    params: HubbardParams
    qnums: QuantumNumbers
    residual: float

    def __post_init__(self):
        k = np.asarray(self.k, dtype=float)
        lam = np.asarray(self.lam, dtype=float)
        if k.size != self.params.N or lam.size != self.params.M:
            raise ValidationError("root vector lengths do not match the parameters")
        if not np.all(np.diff(k) > 0):
            raise ValidationError("charge rapidities must be strictly increasing")
        if np.any(np.abs(k) >= np.pi):
            raise ValidationError("charge rapidities must lie inside (-pi, pi)")
        if lam.size > 1 and not np.all(np.diff(lam) > 0):
            raise ValidationError("spin rapidities must be strictly increasing")
        if self.residual > RESIDUAL_CAP:
            raise ValidationError(f"residual {self.residual:.3e} exceeds {RESIDUAL_CAP:g}")
        # lam grows like U tan(pi J/N) at large U, so its check is relative
        k_asym = np.abs(k + k[::-1]).max()
        lam_asym = np.abs(lam + lam[::-1]).max() / max(1.0, np.abs(lam).max())
        if max(k_asym, lam_asym) > ANTISYMMETRY_TOL:
            raise ValidationError("roots are not antisymmetric under index reversal")
        k.flags.writeable = False
        lam.flags.writeable = False
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "lam", lam)


def _bisect(fn, lo: float, hi: float, iters: int = 80) -> float:
    flo = fn(lo)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if (fn(mid) > 0) == (flo > 0):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _bootstrap(qnums: QuantumNumbers, L: int, U: float) -> tuple[np.ndarray, np.ndarray]:
    """Cold-start guess: free-momentum k, tangent-spaced lam, bisection sweeps."""
    I, J = qnums.I, qnums.J
    N, M = I.size, J.size
    k = 2.0 * np.pi * I / L
    lam = (U / 4.0) * np.tan(np.pi * J / N)
    for _ in range(3):
        for a in range(M):

            def g_a(x, a=a):
                others = np.delete(lam, a)
                t1 = 2.0 * np.arctan(4.0 * (x - np.sin(k)) / U)
                t2 = 2.0 * np.arctan(2.0 * (x - others) / U)
                return t1.sum() - t2.sum() - 2.0 * np.pi * J[a]

            w = 2.0 * max(1.0, abs(lam[a]))
            lo, hi = lam[a] - w, lam[a] + w
            while g_a(lo) > 0:
                w *= 2.0
                lo -= w
            while g_a(hi) < 0:
                w *= 2.0
                hi += w
            lam[a] = _bisect(g_a, lo, hi)
        for j in range(N):

            def f_j(x, j=j):
                t1 = 2.0 * np.arctan(4.0 * (lam - np.sin(x)) / U)
                return x * L - t1.sum() - 2.0 * np.pi * I[j]

            k[j] = _bisect(f_j, -np.pi, np.pi)
    return k, lam


def solve_bae(
    params: HubbardParams,
    qnums: QuantumNumbers,
    guess: Optional[BetheRoots] = None,
    *,
    tol: float = RESIDUAL_CAP,
    max_iter: int = 60,
) -> BetheRoots:
    """Damped Newton solve of the root equations to max-norm residual <= tol.

    Without a guess the solver bootstraps itself by per-variable bisection,
    which is reliable in the stiff-free regime U >~ 1 that sweeps start from;
    inside a sweep the previous solution is passed as the guess.  Steps are
    halved whenever the full Newton update would increase the residual.
    """
    if not 0 < tol <= RESIDUAL_CAP:
        raise ValidationError(f"tol must be in (0, {RESIDUAL_CAP:g}]")
    if qnums.I.size != params.N or qnums.J.size != params.M:
        raise ValidationError("quantum number lengths do not match the parameters")
    N, M, L, U = params.N, params.M, params.L, params.U
    if guess is not None:
        if guess.k.size != N or guess.lam.size != M:
            raise ValidationError("guess dimensions do not match the parameters")
        x = np.concatenate([guess.k, guess.lam])
    else:
        x = np.concatenate(_bootstrap(qnums, L, U))
    I, J = qnums.I, qnums.J

    def max_defect(y):
        return float(np.abs(kernels.defects(y[:N], y[N:], I, J, L, U)).max())

    residual = max_defect(x)
    for _ in range(max_iter):
        if residual <= tol:
            break
        defect = kernels.defects(x[:N], x[N:], I, J, L, U)
        try:
            step = np.linalg.solve(kernels.jacobian(x[:N], x[N:], L, U), -defect)
        except np.linalg.LinAlgError as exc:
            raise NumericFailureError(f"singular Jacobian at U={U!r}: {exc}") from exc
        alpha = 1.0
        while alpha > 1e-8:
            if max_defect(x + alpha * step) < residual:
                break
            alpha *= 0.5
        x = x + alpha * step
        residual = max_defect(x)
    if residual > tol:
        raise NonConvergenceError(f"root solve stalled at U={U!r}", residual, max_iter)
    return BetheRoots(x[:N].copy(), x[N:].copy(), params, qnums, residual)


def _u_grid(U_start: float, U_end: float, dU: float) -> np.ndarray:
    if not (U_start >= U_end > 0):
        raise ValidationError("need U_start >= U_end > 0")
    if dU <= 0:
        raise ValidationError("dU must be positive")
    n = int(math.floor((U_start - U_end) / dU + 1e-9))
    grid = U_start - dU * np.arange(n + 1)
    if U_start - n * dU - U_end > 1e-9 * max(1.0, dU):
        grid = np.append(grid, U_end)
    return grid


def continuation_sweep(
    L: int,
    N: int,
    M: int,
    U_start: float,
    U_end: float,
    dU: float,
    *,
    tol: float = RESIDUAL_CAP,
    max_iter: int = 60,
) -> list[BetheRoots]:
    """Solves on the descending grid U_start, U_start - dU, ..., U_end.

    The first point bootstraps cold; every later point is warm-started from
    its predecessor.  A failing step is retried once through the midpoint
    before the sweep gives up with everything that did converge attached.
    """
    qnums = ground_state_quantum_numbers(L, N, M)
    grid = _u_grid(U_start, U_end, dU)
    results: list[BetheRoots] = []
    for U in grid:
        prev = results[-1] if results else None
        params = HubbardParams(L, N, M, float(U))
        try:
            roots = solve_bae(params, qnums, prev, tol=tol, max_iter=max_iter)
        except (NonConvergenceError, NumericFailureError) as exc:
            if prev is None:
                raise PartialResultError(str(exc), results, float(U)) from exc
            try:
                mid_params = HubbardParams(L, N, M, float(prev.params.U + U) / 2.0)
                mid = solve_bae(mid_params, qnums, prev, tol=tol, max_iter=max_iter)
                roots = solve_bae(params, qnums, mid, tol=tol, max_iter=max_iter)
            except (NonConvergenceError, NumericFailureError) as exc2:
                raise PartialResultError(str(exc2), results, float(U)) from exc2
        results.append(roots)
    return results


def energy(roots: BetheRoots) -> float:
    """Total energy -2 sum_j cos k_j."""
    return float(-2.0 * np.sum(np.cos(roots.k)))


@dataclass(frozen=True)
class DensityOfStates:
    """Inverse local root spacing on the gap midpoints, with the root support."""

    k_mid: np.ndarray
    rho: np.ndarray
    support: tuple[float, float]

    def __post_init__(self):
        if self.k_mid.shape != self.rho.shape or self.k_mid.ndim != 1:
            raise ValidationError("k_mid and rho must be matching vectors")
        if not np.all(np.diff(self.k_mid) > 0):
            raise ValidationError("k_mid must be strictly increasing")
        if not np.all(self.rho > 0):
            raise ValidationError("rho must be positive everywhere")


def density_of_state(roots: BetheRoots) -> DensityOfStates:
    """rho at each gap midpoint: rho[(k_{j+1}+k_j)/2] = 1 / (L (k_{j+1}-k_j))."""
    k = roots.k
    gaps = np.diff(k)
    if k.size < 2 or not np.all(gaps > 0):
        raise ValidationError("need at least two strictly increasing charge rapidities")
    rho = 1.0 / (roots.params.L * gaps)
    k_mid = 0.5 * (k[1:] + k[:-1])
    return DensityOfStates(k_mid, rho, (float(k[0]), float(k[-1])))


def resample_to_grid(dos: DensityOfStates, B: int) -> DensityDistribution:
    """Common-support histogram: B uniform bins over [-pi, pi].

    rho is interpolated linearly between its midpoints and taken as zero
    outside them, multiplied by the bin width, and renormalized to sum 1.
    """
    if int(B) != B or B < 16:
        raise ValidationError("B must be an integer of at least 16")
    B = int(B)
    width = 2.0 * np.pi / B
    centers = -np.pi + width * (np.arange(B) + 0.5)
    values = np.interp(centers, dos.k_mid, dos.rho, left=0.0, right=0.0)
    return DensityDistribution(centers, values * width, renormalize=True)


def hubbard_dff_from_roots(
    sweep: Sequence[BetheRoots],
    B: int,
    *,
    include_eq6: bool = False,
) -> FidelityCurve:
    """Fidelity curve from an already-computed descending-U root sweep.

    Consecutive root sets at U and U - dU give one record at the lower U of
    the pair: F between the resampled densities and the susceptibility
    2(1-F)/dU**2.  With include_eq6 the direct-derivative estimator built
    from the same pair of densities is added to every record.
    """
    if len(sweep) < 2:
        raise ValidationError("need at least two root sets")
    us = [r.params.U for r in sweep]
    if any(b >= a for a, b in zip(us, us[1:])):
        raise ValidationError("root sets must be ordered by strictly decreasing U")
    densities = [resample_to_grid(density_of_state(r), B) for r in sweep]
    records = []
    for i in range(len(sweep) - 1):
        du = us[i] - us[i + 1]
        F = fidelity(densities[i], densities[i + 1])
        chi6 = None
        if include_eq6:
            chi6 = susceptibility_from_pair(densities[i + 1], densities[i], du)
        records.append(
            FidelityRecord(
                param=float(us[i + 1]),
                F=F,
                chi_eq5=susceptibility_from_fidelity(F, du),
                chi_eq6=chi6,
            )
        )
    return FidelityCurve("U", tuple(reversed(records)))


def hubbard_dff_sweep(
    L: int,
    N: int,
    M: int,
    U_start: float,
    U_end: float,
    dU: float,
    B: int,
    *,
    include_eq6: bool = False,
    tol: float = RESIDUAL_CAP,
    max_iter: int = 60,
) -> FidelityCurve:
    """Continuation sweep plus resampled-density fidelity records."""
    sweep = continuation_sweep(L, N, M, U_start, U_end, dU, tol=tol, max_iter=max_iter)
    return hubbard_dff_from_roots(sweep, B, include_eq6=include_eq6)
