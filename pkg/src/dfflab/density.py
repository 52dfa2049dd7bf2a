"""Discrete density distributions and the fidelity / susceptibility kernels.

A density distribution is a normalized nonnegative weight vector over a
strictly increasing list of support labels.  Fidelity between two
distributions on the same support is the Bhattacharyya overlap
sum_x sqrt(a_x b_x); its leading-order drop rate under a parameter change
is available through two independent estimators, one from the fidelity
value itself and one from the per-label density derivative.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import SupportMismatchError, ValidationError

NORMALIZATION_TOL = 1e-9
SUPPORT_TOL = 1e-12

__all__ = [
    "DensityDistribution",
    "FidelityRecord",
    "FidelityCurve",
    "SingularTermWarning",
    "fidelity",
    "susceptibility_from_fidelity",
    "susceptibility_from_derivative",
    "susceptibility_from_pair",
    "central_difference_density",
]


class SingularTermWarning(UserWarning):
    """Raised when density weights vanish under a non-vanishing derivative."""


class DensityDistribution:
    """Normalized weights over a labeled discrete support.

    Parameters
    ----------
    labels : strictly increasing support points.
    weights : nonnegative weights, one per label, summing to 1 within 1e-9.
    renormalize : opt in to dividing the weights by their sum instead of
        rejecting an unnormalized vector.
    """

    __slots__ = ("labels", "weights")

    def __init__(self, labels, weights, *, renormalize: bool = False):
        labels = np.asarray(labels, dtype=float).copy()
        weights = np.asarray(weights, dtype=float).copy()
        if labels.ndim != 1 or weights.ndim != 1 or labels.size != weights.size:
            raise ValidationError("labels and weights must be 1-d and the same length")
        if labels.size == 0:
            raise ValidationError("empty support")
        if not np.all(np.diff(labels) > 0):
            raise ValidationError("labels must be strictly increasing")
        if np.any(weights < 0):
            raise ValidationError("weights must be nonnegative")
        total = float(weights.sum())
        if renormalize:
            if total <= 0:
                raise ValidationError("cannot renormalize an all-zero weight vector")
            weights = weights / total
        elif abs(total - 1.0) > NORMALIZATION_TOL:
            raise ValidationError(
                f"weights sum to {total!r}, more than {NORMALIZATION_TOL:g} away from 1"
            )
        labels.flags.writeable = False
        weights.flags.writeable = False
        self.labels = labels
        self.weights = weights

    def __len__(self) -> int:
        return self.labels.size

    def __repr__(self) -> str:
        return f"DensityDistribution({self.labels.size} points on [{self.labels[0]:g}, {self.labels[-1]:g}])"


@dataclass(frozen=True)
class FidelityRecord:
    param: float
    F: float
    chi_eq5: float
    chi_eq6: Optional[float] = None


@dataclass(frozen=True)
class FidelityCurve:
    """Sweep result: one record per parameter value, sorted ascending."""

    parameter_name: str
    records: tuple = field(default_factory=tuple)

    def __post_init__(self):
        records = tuple(self.records)
        object.__setattr__(self, "records", records)
        params = [r.param for r in records]
        if any(b <= a for a, b in zip(params, params[1:])):
            raise ValidationError("records must be strictly sorted by parameter")
        if any(not (0.0 <= r.F <= 1.0) for r in records):
            raise ValidationError("every F must lie in [0, 1]")

    def params(self) -> np.ndarray:
        return np.array([r.param for r in self.records])

    def fidelities(self) -> np.ndarray:
        return np.array([r.F for r in self.records])

    def chi_eq5_values(self) -> np.ndarray:
        return np.array([r.chi_eq5 for r in self.records])


def _check_same_support(a: DensityDistribution, b: DensityDistribution) -> None:
    if len(a) != len(b):
        raise SupportMismatchError(f"supports differ in length: {len(a)} vs {len(b)}")
    if np.max(np.abs(a.labels - b.labels)) > SUPPORT_TOL:
        raise SupportMismatchError("support labels differ beyond tolerance")


def _check_normalized(d: DensityDistribution, name: str) -> None:
    total = float(d.weights.sum())
    if abs(total - 1.0) > NORMALIZATION_TOL:
        raise ValidationError(f"{name} is unnormalized (sum {total!r})")


def fidelity(a: DensityDistribution, b: DensityDistribution) -> float:
    """Bhattacharyya overlap sum_x sqrt(a_x b_x) of two distributions.

    Symmetric in its arguments, equal to 1 exactly when a == b, and bounded
    by [0, 1] (Cauchy-Schwarz).  Both inputs must live on the same support.
    """
    _check_same_support(a, b)
    _check_normalized(a, "first distribution")
    _check_normalized(b, "second distribution")
    value = float(np.sqrt(a.weights * b.weights).sum())
    return min(value, 1.0)


def susceptibility_from_fidelity(F: float, delta: float) -> float:
    """Leading-order susceptibility 2(1 - F)/delta**2 from a fidelity drop."""
    if delta <= 0:
        raise ValidationError("delta must be positive")
    if not (0.0 <= F <= 1.0 + 1e-12):
        raise ValidationError(f"F={F!r} outside [0, 1]")
    return max(0.0, 2.0 * (1.0 - F) / (delta * delta))


def susceptibility_from_derivative(
    n: DensityDistribution,
    dn: Sequence[float],
    *,
    floor: float = 1e-14,
    derivative_floor: float = 1e-10,
) -> float:
    """Direct susceptibility sum_x (dn_x)**2 / (4 n_x).

    Labels where n_x < floor are excluded: silently when the derivative also
    vanishes (a 0/0 limit contributes nothing), with a SingularTermWarning
    carrying the count when it does not, since a diverging term there is the
    signal of interest and must not be clipped into a finite number.
    """
    dn = np.asarray(dn, dtype=float)
    if dn.shape != n.weights.shape:
        raise ValidationError("derivative vector length does not match the support")
    small = n.weights < floor
    singular = int(np.count_nonzero(small & (np.abs(dn) >= derivative_floor)))
    if singular:
        warnings.warn(
            f"{singular} support point(s) have vanishing density under a "
            "non-vanishing derivative; their diverging terms were excluded",
            SingularTermWarning,
            stacklevel=2,
        )
    keep = ~small
    if not np.any(keep):
        return 0.0
    return float(np.sum(dn[keep] ** 2 / (4.0 * n.weights[keep])))


def susceptibility_from_pair(
    a: DensityDistribution,
    b: DensityDistribution,
    delta: float,
) -> float:
    """Derivative-route susceptibility estimated from two nearby densities.

    Uses the difference quotient (b - a)/delta together with the averaged
    density, so the estimate is centered at the same midpoint as
    susceptibility_from_fidelity applied to fidelity(a, b).  Where both
    weights vanish the term is a silent 0/0 and drops out.
    """
    if delta <= 0:
        raise ValidationError("delta must be positive")
    _check_same_support(a, b)
    mid = DensityDistribution(a.labels, 0.5 * (a.weights + b.weights))
    dn = (b.weights - a.weights) / delta
    return susceptibility_from_derivative(mid, dn)


def central_difference_density(
    evaluator: Callable[[float], DensityDistribution],
    lam: float,
    delta: float,
) -> np.ndarray:
    """Per-label derivative (n(lam+delta) - n(lam-delta)) / (2 delta)."""
    if delta <= 0:
        raise ValidationError("delta must be positive")
    hi = evaluator(lam + delta)
    lo = evaluator(lam - delta)
    _check_same_support(hi, lo)
    return (hi.weights - lo.weights) / (2.0 * delta)
