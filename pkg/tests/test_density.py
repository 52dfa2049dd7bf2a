import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from dfflab.density import (
    DensityDistribution,
    FidelityCurve,
    FidelityRecord,
    SingularTermWarning,
    central_difference_density,
    fidelity,
    susceptibility_from_derivative,
    susceptibility_from_fidelity,
    susceptibility_from_pair,
)
from dfflab.errors import SupportMismatchError, ValidationError


def dist(weights, labels=None, **kw):
    weights = np.asarray(weights, dtype=float)
    if labels is None:
        labels = np.arange(weights.size, dtype=float)
    return DensityDistribution(labels, weights, **kw)


positive_weights = hnp.arrays(
    np.float64,
    st.integers(min_value=1, max_value=40),
    elements=st.floats(min_value=1e-6, max_value=1.0),
)


def normalized_pair(draw_w):
    w = np.asarray(draw_w, dtype=float)
    return dist(w, renormalize=True)


class TestDensityDistribution:
    def test_basic_construction(self):
        d = dist([0.25, 0.75])
        assert len(d) == 2
        assert d.weights.sum() == 1.0

    def test_arrays_are_frozen(self):
        d = dist([0.5, 0.5])
        with pytest.raises(ValueError):
            d.weights[0] = 0.9
        with pytest.raises(ValueError):
            d.labels[0] = 5.0

    def test_rejects_unnormalized(self):
        with pytest.raises(ValidationError, match="sum"):
            dist([0.5, 0.6])

    def test_renormalize_opt_in(self):
        d = dist([2.0, 2.0], renormalize=True)
        assert d.weights.tolist() == [0.5, 0.5]

    def test_rejects_negative_weights(self):
        with pytest.raises(ValidationError, match="nonnegative"):
            dist([1.1, -0.1])

    def test_rejects_nonincreasing_labels(self):
        with pytest.raises(ValidationError, match="increasing"):
            DensityDistribution([0.0, 0.0], [0.5, 0.5])

    def test_rejects_empty_and_mismatched(self):
        with pytest.raises(ValidationError):
            DensityDistribution([], [])
        with pytest.raises(ValidationError):
            DensityDistribution([0.0, 1.0], [1.0])

    def test_rejects_all_zero_renormalize(self):
        with pytest.raises(ValidationError, match="all-zero"):
            dist([0.0, 0.0], renormalize=True)


class TestFidelity:
    def test_identical_distribution_gives_one(self):
        d = dist([0.3, 0.7])
        assert fidelity(d, d) == 1.0

    def test_disjoint_supports_give_zero(self):
        assert fidelity(dist([1.0, 0.0]), dist([0.0, 1.0])) == 0.0

    def test_single_surviving_term(self):
        value = fidelity(dist([1.0, 0.0]), dist([0.5, 0.5]))
        assert value == pytest.approx(math.sqrt(0.5), rel=1e-12)

    def test_support_length_mismatch(self):
        with pytest.raises(SupportMismatchError, match="length"):
            fidelity(dist([1.0]), dist([0.5, 0.5]))

    def test_support_label_mismatch(self):
        a = DensityDistribution([0.0, 1.0], [0.5, 0.5])
        b = DensityDistribution([0.0, 2.0], [0.5, 0.5])
        with pytest.raises(SupportMismatchError, match="labels"):
            fidelity(a, b)

    @given(positive_weights)
    def test_self_fidelity_is_one(self, w):
        d = normalized_pair(w)
        assert abs(fidelity(d, d) - 1.0) <= 1e-12

    @given(positive_weights, st.randoms(use_true_random=False))
    def test_bounds_and_symmetry(self, w, rng):
        a = normalized_pair(w)
        perturbed = np.asarray(w) * np.array([1.0 + 0.5 * rng.random() for _ in w])
        b = dist(perturbed, renormalize=True)
        f_ab = fidelity(a, b)
        f_ba = fidelity(b, a)
        assert 0.0 <= f_ab <= 1.0
        assert f_ab == f_ba

    @given(positive_weights, st.integers(min_value=0, max_value=10**6))
    def test_distinct_pairs_stay_below_one(self, w, pick):
        # contrapositive of "F = 1 implies equality": move 1e-4 of mass
        w = np.asarray(w, dtype=float)
        a = dist(w, renormalize=True)
        shifted = a.weights.copy()
        i = pick % w.size
        j = (pick + 1) % w.size
        if i == j:
            return
        shifted[i] += 1e-4
        shifted[j] = max(shifted[j] - 1e-4, 0.0)
        b = dist(shifted, renormalize=True)
        assert np.max(np.abs(a.weights - b.weights)) > 1e-9
        assert fidelity(a, b) < 1.0 - 1e-12


class TestSusceptibilityFromFidelity:
    def test_no_drop(self):
        assert susceptibility_from_fidelity(1.0, 0.005) == 0.0

    def test_frozen_example(self):
        assert susceptibility_from_fidelity(0.995, 0.1) == pytest.approx(1.0, rel=1e-12)

    def test_rejects_nonpositive_delta(self):
        with pytest.raises(ValidationError, match="delta"):
            susceptibility_from_fidelity(0.5, 0.0)

    def test_rejects_out_of_range_fidelity(self):
        with pytest.raises(ValidationError):
            susceptibility_from_fidelity(1.5, 0.1)
        with pytest.raises(ValidationError):
            susceptibility_from_fidelity(-0.1, 0.1)

    def test_never_negative_on_roundoff(self):
        assert susceptibility_from_fidelity(1.0 + 0.9e-12, 0.1) == 0.0


class TestSusceptibilityFromDerivative:
    def test_zero_derivative(self):
        assert susceptibility_from_derivative(dist([0.5, 0.5]), [0.0, 0.0]) == 0.0

    def test_two_point_example(self):
        chi = susceptibility_from_derivative(dist([0.5, 0.5]), [0.1, -0.1])
        assert chi == pytest.approx(0.01, rel=1e-14)

    def test_four_point_example(self):
        chi = susceptibility_from_derivative(
            dist([0.25, 0.25, 0.25, 0.25]), [0.2, 0.2, -0.2, -0.2]
        )
        assert chi == pytest.approx(0.16, rel=1e-14)

    def test_length_mismatch(self):
        with pytest.raises(ValidationError, match="length"):
            susceptibility_from_derivative(dist([0.5, 0.5]), [0.1])

    def test_silent_zero_over_zero(self):
        import warnings

        with warnings.catch_warnings():
            warnings.simplefilter("error")
            chi = susceptibility_from_derivative(dist([1.0, 0.0]), [0.1, 0.0])
        assert chi == pytest.approx(0.1**2 / 4.0, rel=1e-14)

    def test_singular_term_excluded_with_warning(self):
        with pytest.warns(SingularTermWarning, match="1 support point"):
            chi = susceptibility_from_derivative(dist([1.0, 0.0]), [0.5, -0.5])
        assert chi == pytest.approx(0.5**2 / 4.0, rel=1e-14)

    @given(positive_weights, st.integers(min_value=1, max_value=5))
    def test_invariant_under_joint_relabeling(self, w, seed):
        d = dist(w, renormalize=True)
        rng = np.random.default_rng(seed)
        dn = rng.normal(size=len(d))
        perm = rng.permutation(len(d))
        chi = susceptibility_from_derivative(d, dn)
        chi_p = susceptibility_from_derivative(dist(d.weights[perm]), dn[perm])
        assert chi_p == pytest.approx(chi, rel=1e-12)


def gaussian_family(lam, x=None):
    if x is None:
        x = np.linspace(-10.0, 10.0, 2001)
    # width also drifts with lam so the family is not shift-symmetric
    w = np.exp(-0.5 * ((x - lam) / (1.0 + 0.2 * lam)) ** 2)
    return DensityDistribution(x, w, renormalize=True)


class TestRouteAgreement:
    def test_gaussian_shift_pair_within_one_percent(self):
        x = np.linspace(-10.0, 10.0, 2001)
        a = DensityDistribution(x, np.exp(-0.5 * x**2), renormalize=True)
        b = DensityDistribution(x, np.exp(-0.5 * (x - 0.01) ** 2), renormalize=True)
        chi5 = susceptibility_from_fidelity(fidelity(a, b), 0.01)
        chi6 = susceptibility_from_pair(a, b, 0.01)
        assert chi5 == pytest.approx(chi6, rel=0.01)
        # the exact susceptibility of a unit-variance Gaussian shift is 1/4
        assert chi5 == pytest.approx(0.25, rel=1e-3)

    def test_route_gap_shrinks_quadratically(self):
        gaps = []
        for delta in (0.02, 0.01, 0.005):
            a = gaussian_family(0.0)
            b = gaussian_family(delta)
            chi5 = susceptibility_from_fidelity(fidelity(a, b), delta)
            chi6 = susceptibility_from_pair(a, b, delta)
            gaps.append(abs(chi5 - chi6))
        assert gaps[0] / gaps[1] == pytest.approx(4.0, rel=0.3)
        assert gaps[1] / gaps[2] == pytest.approx(4.0, rel=0.3)

    def test_pair_rejects_nonpositive_delta(self):
        d = dist([0.5, 0.5])
        with pytest.raises(ValidationError, match="delta"):
            susceptibility_from_pair(d, d, 0.0)

    def test_pair_rejects_support_mismatch(self):
        with pytest.raises(SupportMismatchError):
            susceptibility_from_pair(dist([0.5, 0.5]), dist([1.0]), 0.1)


class TestCentralDifference:
    def test_constant_evaluator(self):
        dn = central_difference_density(lambda lam: dist([0.5, 0.5]), 0.3, 0.01)
        assert np.all(dn == 0.0)

    def test_linear_evaluator_exact(self):
        dn = central_difference_density(lambda lam: dist([lam, 1.0 - lam]), 0.3, 0.01)
        assert dn == pytest.approx([1.0, -1.0], abs=1e-12)

    def test_rejects_nonpositive_delta(self):
        with pytest.raises(ValidationError, match="delta"):
            central_difference_density(lambda lam: dist([0.5, 0.5]), 0.3, -0.01)

    def test_support_mismatch_between_evaluations(self):
        def evaluator(lam):
            labels = [0.0, 1.0] if lam > 0.3 else [0.0, 2.0]
            return DensityDistribution(labels, [0.5, 0.5])

        with pytest.raises(SupportMismatchError):
            central_difference_density(evaluator, 0.3, 0.01)


class TestFidelityCurve:
    def test_accessors(self):
        curve = FidelityCurve(
            "h",
            (
                FidelityRecord(0.1, 0.99, 2.0),
                FidelityRecord(0.2, 0.98, 4.0, 4.1),
            ),
        )
        assert curve.params().tolist() == [0.1, 0.2]
        assert curve.fidelities().tolist() == [0.99, 0.98]
        assert curve.chi_eq5_values().tolist() == [2.0, 4.0]

    def test_rejects_unsorted_records(self):
        with pytest.raises(ValidationError, match="sorted"):
            FidelityCurve("h", (FidelityRecord(0.2, 0.9, 1.0), FidelityRecord(0.1, 0.9, 1.0)))

    def test_rejects_out_of_range_fidelity(self):
        with pytest.raises(ValidationError, match="F"):
            FidelityCurve("h", (FidelityRecord(0.1, 1.2, 1.0),))
