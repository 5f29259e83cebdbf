"""Fundamental sequences: towers, convergence checks, equivalence, derivative."""

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from deltakit import (FundamentalSeq, bump, check_equivalent,
                      check_fundamental, check_zero_off_origin, damped_cos_seq,
                      derivative, lorentz_delta_seq, pair_by_parts,
                      scaled_cos_seq, seq_derivative, sinc_delta, sinc_delta_seq,
                      sinc_step_seq, zero_seq)


def test_tower_consistency():
    xs = np.concatenate([np.linspace(-5, -0.02, 30), np.linspace(0.02, 5, 30)])
    for seq in (sinc_delta_seq(), lorentz_delta_seq()):
        for n in (1, 5, 20):
            d1 = derivative(lambda x: seq.primitive(1, n, x), xs, 1, max_order=4)
            assert np.max(np.abs(d1 - seq.primitive(0, n, xs))) <= 1e-6
            d2 = derivative(lambda x: seq.primitive(2, n, x), xs, 1, max_order=4)
            assert np.max(np.abs(d2 - seq.primitive(1, n, xs))) <= 1e-6


def test_numeric_lifting_matches_closed_form():
    # hide the closed level-2 primitive and let the anchored quadrature lift it
    full = sinc_delta_seq()
    truncated = FundamentalSeq(term=full.term, primitive_order=2,
                               primitives=full.primitives[:1],
                               panel_hint=full.panel_hint, label="lift-check")
    xs = np.linspace(-3.0, 3.0, 41)
    lifted = truncated.primitive(2, 7, xs)
    assert_allclose(lifted, full.primitive(2, 7, xs), atol=1e-8, rtol=0)


def test_check_fundamental_kink_level():
    report = check_fundamental(sinc_delta_seq(), (-5.0, 5.0), n_max=50, tol=0.02)
    assert report.verdict
    ns = np.asarray(report.n_values, dtype=float)
    bounds = 2.0 / (ns * math.pi) + 1e-9
    assert np.all(np.asarray(report.sup_errors) <= bounds)


def test_check_fundamental_damped_cos():
    report = check_fundamental(damped_cos_seq(), (-5.0, 5.0), n_max=100, tol=0.05)
    assert report.verdict
    # sup error at n is 1/n on a grid that nearly hits the extrema
    assert_allclose(report.sup_errors[-1], 1.0 / 100.0, rtol=1e-3)


def test_check_fundamental_fails_at_step_level():
    # the smoothed steps have no continuous uniform limit through 0
    report = check_fundamental(sinc_delta_seq(), (-1.0, 1.0), n_max=60,
                               tol=0.02, order=1)
    assert not report.verdict


def test_check_fundamental_validation():
    with pytest.raises(ValueError):
        check_fundamental(sinc_delta_seq(), (-1.0, 1.0), n_max=1)


def test_equivalence_of_the_two_kernels():
    report = check_equivalent(sinc_delta_seq(), lorentz_delta_seq(),
                              (-5.0, 5.0), n_max=60, tol=0.05)
    assert report.verdict
    ns = np.asarray(report.n_values, dtype=float)
    bound = 2.0 / (ns * math.pi) + 1.0 / (math.pi * ns) \
        + np.log1p(25.0 * ns * ns) / (2 * math.pi * ns)
    assert np.all(np.asarray(report.sup_errors) <= bound + 1e-12)


def test_equivalence_scaled_cos_with_zero():
    report = check_equivalent(scaled_cos_seq(), zero_seq(), (-5.0, 5.0),
                              n_max=50, tol=0.05)
    assert report.verdict


def test_not_equivalent_kernel_and_zero():
    report = check_equivalent(sinc_delta_seq(), zero_seq(), (-5.0, 5.0),
                              n_max=30, tol=0.05)
    assert not report.verdict
    # the kinks approach |x|/2, which is 2.5 at the interval ends
    assert report.sup_errors[-1] > 2.0


def test_equivalence_reflexive_symmetric():
    a, b = sinc_delta_seq(), lorentz_delta_seq()
    assert check_equivalent(a, a, (-5, 5), n_max=10, tol=1e-12).verdict
    r_ab = check_equivalent(a, b, (-5, 5), n_max=40, tol=0.06)
    r_ba = check_equivalent(b, a, (-5, 5), n_max=40, tol=0.06)
    assert r_ab.verdict == r_ba.verdict
    assert_allclose(r_ab.sup_errors, r_ba.sup_errors, rtol=0, atol=0)


def test_derivative_shifts_tower():
    d = seq_derivative(sinc_step_seq())
    assert d.primitive_order == 2
    xs = np.linspace(-3.0, 3.0, 11)
    # the derived terms are the kernel itself (closed form)
    assert_allclose(d.term(7, xs), sinc_delta(7, xs), rtol=0, atol=0)
    # level-1 primitive of the derivative is the original term
    assert_allclose(d.primitive(1, 7, xs), sinc_step_seq().term(7, xs), rtol=0, atol=0)


def test_derivative_of_zero():
    d = seq_derivative(zero_seq())
    xs = np.linspace(-2, 2, 9)
    assert np.all(d.term(4, xs) == 0.0)
    assert d.primitive_order == 1


def test_double_derivative_of_kink_sequence():
    # the smoothed-kink sequence differentiated twice recovers the kernel
    from deltakit import half_abs, sinc_kink, sinc_step
    kinks = FundamentalSeq(term=sinc_kink, primitive_order=0,
                           limit_of_primitives=half_abs,
                           term_derivative=sinc_step, label="kinks")
    second = seq_derivative(seq_derivative(kinks))
    assert second.primitive_order == 2
    xs = np.linspace(-3.0, 3.0, 21)
    # tower levels are exact shifts of the closed forms
    assert_allclose(second.primitive(2, 5, xs), sinc_kink(5, xs), rtol=0, atol=0)
    assert_allclose(second.primitive(1, 5, xs), sinc_step(5, xs), rtol=0, atol=0)
    # the new terms come from finite differences of the step closed form
    assert np.max(np.abs(second.term(5, xs) - sinc_delta(5, xs))) <= 1e-6


def test_derivative_respects_equivalence():
    # equivalent pair stays equivalent after differentiation, one level up
    a, b = damped_cos_seq(), zero_seq()
    base = check_equivalent(a, b, (-5, 5), n_max=80, tol=0.05)
    assert base.verdict
    da, db = seq_derivative(a), seq_derivative(b)
    lifted = check_equivalent(da, db, (-5, 5), n_max=80, tol=0.05)
    assert lifted.verdict
    assert max(da.primitive_order, db.primitive_order) == a.primitive_order + 1


def test_derivative_rejects_non_differentiable():
    rough = FundamentalSeq(term=lambda n, x: np.abs(np.asarray(x, dtype=float)),
                           primitive_order=0, differentiable_terms=False)
    with pytest.raises(ValueError):
        seq_derivative(rough)


def test_pair_by_parts_delta_property():
    f = bump(-2.0, -1.0, 1.0, 2.0)
    value = pair_by_parts(sinc_delta_seq(), f)
    assert abs(value - 1.0) <= 1e-6


def test_pair_by_parts_zero_and_far_support():
    f = bump(-2.0, -1.0, 1.0, 2.0)
    assert pair_by_parts(zero_seq(), f) == 0.0
    far = bump(1.0, 1.25, 1.75, 2.0)
    assert abs(pair_by_parts(sinc_delta_seq(), far)) <= 1e-6


def test_pair_by_parts_order_guard():
    f = bump(-2.0, -1.0, 1.0, 2.0)
    seq = sinc_delta_seq()
    for _ in range(3):
        seq = seq_derivative(seq)  # k = 5 exceeds the default derivative order
    with pytest.raises(ValueError):
        pair_by_parts(seq, f)


def test_pair_by_parts_extrapolated_without_limit():
    blind = FundamentalSeq(term=sinc_delta, primitive_order=2,
                           primitives=sinc_delta_seq().primitives,
                           limit_of_primitives=None,
                           panel_hint=lambda n: min(0.5, math.pi / n))
    f = bump(-2.0, -1.0, 1.0, 2.0)
    value = pair_by_parts(blind, f)
    assert abs(value - 1.0) <= 1e-4


def test_zero_off_origin_lorentz():
    report = check_zero_off_origin(lorentz_delta_seq(), 0.5, n_max=200)
    assert report.verdict
    ns = np.asarray(report.n_values, dtype=float)
    assert np.all(np.asarray(report.sup_errors) <= 4.0 / (math.pi * ns) + 1e-12)


def test_zero_off_origin_step_side():
    report = check_zero_off_origin(sinc_delta_seq(), 1.0, n_max=200)
    assert report.verdict
    ns = np.asarray(report.n_values, dtype=float)
    assert np.all(np.asarray(report.sup_errors) <= 2.0 / (math.pi * ns) + 1e-12)


def test_zero_off_origin_trivial_and_validation():
    assert check_zero_off_origin(zero_seq(), 0.5, n_max=5).verdict
    with pytest.raises(ValueError):
        check_zero_off_origin(zero_seq(), 0.0)
