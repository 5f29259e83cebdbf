"""Acceptance suite: every quantitative exit criterion at its pinned tolerance.

Run with `pytest tests/test_acceptance.py -v -s` to see one PASS/FAIL line per
criterion. Tolerances are fixed here, not configurable.

Known-red criteria. Criteria 3 and 4 assert textbook rate-law envelopes as
observed rates, and the measurement contradicts them: for smooth bumps the
truncated-spectrum pairing error decays super-algebraically (the error equals
the tail of the bump's spectrum, so by R = 200 it is already below 1e-10 and
the log-log slope is far steeper than the asserted [-1.3, -0.7] window), and
the Lorentz pairing error is Theta(eps) (the eps*ln(1/eps) form is only an
upper bound), so the ratio err/(C*eps*ln(1/eps)) drifts like 1/ln(1/eps)
across four decades -- a factor of 4, never within +-20% of a single constant.
Both checks are kept in their asserted form, and fail, rather than being
loosened to match the (better-than-asserted) measured behavior.
"""

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from deltakit import (bump, derivative, extrapolate_limit, fubini_square,
                      half_abs, lorentz_delta_n, lorentz_kink, pair_by_parts,
                      pair_lorentz, pair_sinc, si, sinc_delta, sinc_kink,
                      sinc_sq_integral, sinc_step, sinc_delta_seq)

from _oracles import cos_kernel_oracle, kink_by_double_quadrature

GRID = np.linspace(-5.0, 5.0, 2001)


def corpus():
    """Three bumps with f(0) = 1, 0.5, 0 via plateau position and scaling."""
    base = bump(-2.0, -1.0, 1.0, 2.0)
    return [(base, 1.0), (base.scaled(0.5), 0.5), (bump(1.0, 2.0, 3.0, 4.0), 0.0)]


def report(name, ok, detail=""):
    print(f"[acceptance] {name}: {'PASS' if ok else 'FAIL'} {detail}")
    return ok


def test_dirichlet_integral_limits():
    ok_tail = abs(si(1e6) - math.pi / 2) <= 2e-6
    diffs = []
    for R in (1.0, 5.0, 10.0):
        rx = fubini_square(R, "x_first")
        ra = fubini_square(R, "alpha_first")
        diffs.append(abs(rx.value - ra.value))
    ok_orders = max(diffs) <= 1e-8
    gap50 = abs(fubini_square(50.0, "x_first").value - math.pi / 2)
    ok_gap = gap50 <= 0.05
    ok = report("1 Dirichlet integral", ok_tail and ok_orders and ok_gap,
                f"(si tail {abs(si(1e6) - math.pi/2):.2e}, order diff {max(diffs):.2e}, "
                f"gap at R=50 {gap50:.3f})")
    assert ok


def test_kink_uniform_bound():
    worst = -math.inf
    target = half_abs(GRID)
    for n in range(1, 201):
        sup = float(np.max(np.abs(sinc_kink(n, GRID) - target)))
        worst = max(worst, sup - (2.0 / (n * math.pi) + 1e-9))
    ok = report("2 kink uniform bound", worst <= 0.0, f"(worst margin {worst:.2e})")
    assert ok


def test_defining_property_fourier():
    rs = (100.0, 200.0, 400.0, 800.0)
    all_ok = True
    details = []
    for f, f0 in corpus():
        samples = [(r, pair_sinc(r, f).value) for r in rs]
        limit = extrapolate_limit(samples, mode="inverse_param")
        ok_limit = abs(limit - f0) <= 1e-3
        raw_800 = abs(samples[-1][1] - f0)
        ok_raw = raw_800 <= 5e-3
        errors = [(r, abs(v - f0)) for r, v in samples if abs(v - f0) > 0.0]
        if len(errors) >= 2:
            lr = np.log([r for r, _ in errors])
            le = np.log([e for _, e in errors])
            slope = float(np.polyfit(lr, le, 1)[0])
        else:
            slope = math.nan
        ok_slope = -1.3 <= slope <= -0.7
        details.append(f"f0={f0}: |limit-f0|={abs(limit - f0):.1e}, "
                       f"raw(800)={raw_800:.1e}, slope={slope:.2f}")
        all_ok = all_ok and ok_limit and ok_raw and ok_slope
    ok = report("3 defining property (fourier)", all_ok, "(" + "; ".join(details) + ")")
    assert ok


def test_lorentz_rate_constant():
    f, f0 = corpus()[0]
    eps_list = (1e-1, 1e-2, 1e-3, 1e-4)
    errors = {eps: abs(pair_lorentz(eps, f).value - f0) for eps in eps_list}
    fitted_c = errors[1e-2] / (1e-2 * math.log(1.0 / 1e-2))
    ratios = {eps: errors[eps] / (fitted_c * eps * math.log(1.0 / eps))
              for eps in eps_list}
    all_ok = all(0.8 <= ratio <= 1.2 for ratio in ratios.values())
    ok = report("4 lorentz rate constant", all_ok,
                "(err/(C eps ln(1/eps)) = "
                + ", ".join(f"{eps:.0e}:{ratios[eps]:.2f}" for eps in eps_list) + ")")
    assert ok


def test_kernels_equivalent_bound():
    sups = []
    all_ok = True
    for n in (10, 100, 1000):
        sup = float(np.max(np.abs(sinc_kink(n, GRID) - lorentz_kink(n, GRID))))
        bound = 2.0 / (n * math.pi) + 1.0 / (math.pi * n) \
            + math.log(1.0 + 25.0 * n * n) / (2 * math.pi * n)
        sups.append(sup)
        all_ok = all_ok and sup <= bound
    monotone = sups[0] > sups[1] > sups[2]
    ok = report("5 kernel towers equivalent", all_ok and monotone,
                f"(sup diffs {sups[0]:.3e} > {sups[1]:.3e} > {sups[2]:.3e})")
    assert ok


def test_zero_off_origin_bounds():
    xs = np.linspace(0.5, 5.5, 1001)
    xs_both = np.concatenate([-xs[::-1], xs])
    worst_lorentz = -math.inf
    worst_step = -math.inf
    for n in range(1, 1001):
        sup_l = float(np.max(np.abs(lorentz_delta_n(n, xs_both))))
        worst_lorentz = max(worst_lorentz, sup_l - 4.0 / (math.pi * n))
        sup_s = float(np.max(np.abs(sinc_step(n, xs) - 0.5)))
        worst_step = max(worst_step, sup_s - 2.0 / (math.pi * n * 0.5))
    ok = report("6 zero off the origin", worst_lorentz <= 0.0 and worst_step <= 0.0,
                f"(margins {worst_lorentz:.2e}, {worst_step:.2e})")
    assert ok


def test_halfangle_parts_identity():
    worst = 0.0
    for n in (1, 5, 20):
        for x in np.linspace(0.1, 5.0, 99):
            u = n * x
            head = 2.0 * math.sin(0.5 * u) ** 2 / u
            worst = max(worst, abs(si(u) - head - sinc_sq_integral(0.0, 0.5 * u)))
    ok = report("7 half-angle identity", worst <= 1e-9, f"(max residual {worst:.2e})")
    assert ok


def test_bump_shape_properties():
    f = bump(1.0, 2.0, 3.0, 4.0)
    plateau = np.linspace(2.01, 2.99, 301)
    ok_plateau = bool(np.all(np.abs(f(plateau) - 1.0) <= 1e-14))
    outside = np.concatenate([np.linspace(-3.0, 0.999, 101), np.linspace(4.001, 8.0, 101)])
    ok_outside = bool(np.all(f(outside) == 0.0))
    worst_fd = max(abs(derivative(f, x0, order))
                   for x0 in (1.0, 4.0) for order in (1, 2, 3))
    ok = report("8 bump shape", ok_plateau and ok_outside and worst_fd <= 1e-4,
                f"(worst edge derivative {worst_fd:.2e})")
    assert ok


def test_closed_forms_vs_quadrature():
    rng = np.random.default_rng(20250809)
    worst_kernel = 0.0
    for _ in range(100):
        r = rng.uniform(0.5, 20.0)
        x = rng.uniform(-5.0, 5.0)
        worst_kernel = max(worst_kernel, abs(sinc_delta(r, x) - cos_kernel_oracle(r, x)))
    ok_kernel = worst_kernel <= 1e-10

    worst_kink = 0.0
    for _ in range(20):
        n = rng.uniform(1.0, 8.0)
        x = rng.uniform(-5.0, 5.0)
        worst_kink = max(worst_kink, abs(sinc_kink(n, x) - kink_by_double_quadrature(n, x)))
    ok_kink = worst_kink <= 1e-8
    ok = report("9 closed forms vs quadrature", ok_kernel and ok_kink,
                f"(kernel {worst_kernel:.2e}, double primitive {worst_kink:.2e})")
    assert ok


def test_parts_vs_direct_pairing():
    seq = sinc_delta_seq()
    rs = (100.0, 200.0, 400.0, 800.0)
    worst = 0.0
    for f, _f0 in corpus():
        by_parts = pair_by_parts(seq, f)
        direct = extrapolate_limit([(r, pair_sinc(r, f).value) for r in rs],
                                   mode="inverse_param")
        worst = max(worst, abs(by_parts - direct))
    ok = report("10 parts vs direct pairing", worst <= 1e-4, f"(worst gap {worst:.2e})")
    assert ok
