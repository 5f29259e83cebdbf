"""Sequential representation of distributions: fundamental sequences.

A FundamentalSeq holds a sequence of continuous terms together with its
anchored primitive tower: primitive(0) is the term itself, primitive(j) is
integrated from 0, and primitive_order is the level k at which the primitives
converge almost uniformly. Checks run on uniform grids (2001 points by
default) over finitely many intervals; "almost uniform" is only ever probed
on the intervals supplied, which is the unavoidable finite truncation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .families import (half_abs, half_step, lorentz_delta_n,
                       lorentz_delta_prime, lorentz_kink, lorentz_step,
                       sinc_delta, sinc_delta_prime, sinc_kink, sinc_step)
from .pairing import extrapolate_limit
from .quadrature import adaptive_quad, anchored_primitive_values
from .testfn import Interval, derivative

__all__ = [
    "FundamentalSeq",
    "GridReport",
    "sinc_delta_seq",
    "sinc_step_seq",
    "lorentz_delta_seq",
    "zero_seq",
    "damped_cos_seq",
    "scaled_cos_seq",
    "check_fundamental",
    "check_equivalent",
    "seq_derivative",
    "pair_by_parts",
    "check_zero_off_origin",
]

DEFAULT_GRID = 2001
LIFT_TOL = 1e-10


@dataclass(frozen=True)
class GridReport:
    interval: tuple
    grid_points: int
    n_values: tuple
    sup_errors: tuple
    verdict: bool
    bound_used: str
    tol: float | None = None
    cauchy_tail: tuple | None = None


class FundamentalSeq:
    """Indexed sequence of continuous functions with an anchored primitive tower.

    term(n, x) evaluates the n-th member; primitives holds closed-form
    anchored primitives for levels 1..len(primitives). Levels up to
    primitive_order beyond the closed forms are lifted numerically
    (anchored adaptive quadrature, tolerance 1e-10). Immutable; evaluations
    are safe to run concurrently.
    """

    def __init__(self, term, primitive_order, primitives=(),
                 limit_of_primitives=None, term_derivative=None,
                 label="custom", panel_hint=None, differentiable_terms=True):
        self.term = term
        self.primitive_order = int(primitive_order)
        self.primitives = tuple(primitives)
        self.limit_of_primitives = limit_of_primitives
        self.term_derivative = term_derivative
        self.label = label
        self.panel_hint = panel_hint
        self.differentiable_terms = bool(differentiable_terms)
        if self.primitive_order < 0:
            raise ValueError("primitive_order must be >= 0")

    def __repr__(self):
        return f"FundamentalSeq({self.label}, k={self.primitive_order})"

    def _max_panel(self, n):
        return self.panel_hint(n) if self.panel_hint is not None else 0.5

    def primitive(self, level, n, x):
        """Anchored primitive of the given level: primitive(0) is the term."""
        level = int(level)
        if level < 0:
            raise ValueError("primitive level must be >= 0")
        if level == 0:
            return self.term(n, x)
        if level <= len(self.primitives):
            return self.primitives[level - 1](n, x)
        below = lambda t: self.primitive(level - 1, n, t)
        return anchored_primitive_values(below, x, tol=LIFT_TOL,
                                         max_panel=self._max_panel(n))


def sinc_delta_seq():
    """The truncated-spectrum delta sequence with its closed tower (k = 2)."""
    return FundamentalSeq(
        term=sinc_delta, primitive_order=2,
        primitives=(sinc_step, sinc_kink),
        limit_of_primitives=half_abs,
        term_derivative=sinc_delta_prime,
        label="fourier_kernel",
        panel_hint=lambda n: min(0.5, math.pi / n))


def sinc_step_seq():
    """The smoothed half-step sequence (k = 1, kink primitives)."""
    return FundamentalSeq(
        term=sinc_step, primitive_order=1,
        primitives=(sinc_kink,),
        limit_of_primitives=half_abs,
        term_derivative=sinc_delta,
        label="fourier_step",
        panel_hint=lambda n: min(0.5, math.pi / n))


def lorentz_delta_seq():
    """The Lorentz delta sequence (eps = 1/n view) with its closed tower."""
    return FundamentalSeq(
        term=lorentz_delta_n, primitive_order=2,
        primitives=(lorentz_step, lorentz_kink),
        limit_of_primitives=half_abs,
        term_derivative=lorentz_delta_prime,
        label="lorentz")


def zero_seq():
    """The constant zero sequence (k = 0)."""
    zero = lambda n, x: np.zeros_like(np.asarray(x, dtype=float))
    return FundamentalSeq(term=zero, primitive_order=0,
                          limit_of_primitives=lambda x: np.zeros_like(np.asarray(x, dtype=float)),
                          term_derivative=zero, label="zero")


def damped_cos_seq():
    """Terms -cos(n x)/n: converge almost uniformly to 0 already at k = 0."""
    return FundamentalSeq(
        term=lambda n, x: -np.cos(n * np.asarray(x, dtype=float)) / n,
        primitive_order=0,
        limit_of_primitives=lambda x: np.zeros_like(np.asarray(x, dtype=float)),
        term_derivative=lambda n, x: np.sin(n * np.asarray(x, dtype=float)),
        label="damped_cos",
        panel_hint=lambda n: min(0.5, math.pi / n))


def scaled_cos_seq():
    """Terms n cos(n x): fundamental at k = 2, equivalent to the zero sequence."""
    return FundamentalSeq(
        term=lambda n, x: n * np.cos(n * np.asarray(x, dtype=float)),
        primitive_order=2,
        primitives=(lambda n, x: np.sin(n * np.asarray(x, dtype=float)),
                    lambda n, x: (1.0 - np.cos(n * np.asarray(x, dtype=float))) / n),
        limit_of_primitives=lambda x: np.zeros_like(np.asarray(x, dtype=float)),
        term_derivative=lambda n, x: -n * n * np.sin(n * np.asarray(x, dtype=float)),
        label="scaled_cos",
        panel_hint=lambda n: min(0.5, math.pi / n))


def _grid(interval, grid_points):
    iv = Interval.coerce(interval)
    return iv, np.linspace(iv.lo, iv.hi, int(grid_points))


def _tail_diameters(values):
    """cauchy_tail[i] = sup-grid diameter over members with index >= i."""
    rev_max = np.maximum.accumulate(values[::-1], axis=0)[::-1]
    rev_min = np.minimum.accumulate(values[::-1], axis=0)[::-1]
    return np.max(rev_max - rev_min, axis=1)


def check_fundamental(seq, interval=(-5.0, 5.0), n_max=50, tol=1e-2, *,
                      grid_points=DEFAULT_GRID, order=None):
    """Verify almost-uniform convergence of the level-k primitives on a grid.

    Evaluates primitive(order, n, .) for n = 1..n_max and checks the sup-norm
    Cauchy criterion: the tail diameter over members n >= n_max/2 must fall
    below 2*tol (diameter is at most twice the distance to a limit). When the
    level matches the declared limit, the sup errors against the limit must
    also decrease below tol by n_max. The verdict fails when the sup errors
    do not decrease.
    """
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    iv, xs = _grid(interval, grid_points)
    k = seq.primitive_order if order is None else int(order)
    ns = np.arange(1, n_max + 1)
    values = np.vstack([np.asarray(seq.primitive(k, int(n), xs), dtype=float) for n in ns])

    cauchy = _tail_diameters(values)
    half = max(0, n_max // 2 - 1)
    cauchy_ok = cauchy[half] <= 2.0 * tol

    limit = seq.limit_of_primitives if k == seq.primitive_order else None
    if limit is not None:
        target = np.asarray(limit(xs), dtype=float)
        sup_errors = np.max(np.abs(values - target), axis=1)
        bound_used = "sup |primitive_k(n, x) - limit(x)| on grid"
        decreasing = sup_errors[-1] <= sup_errors[0] or sup_errors[0] <= tol
        verdict = bool(cauchy_ok and sup_errors[-1] <= tol and decreasing)
    else:
        sup_errors = cauchy
        bound_used = "sup-norm Cauchy tail diameter on grid"
        decreasing = cauchy[half] <= 0.5 * cauchy[0] or cauchy[0] <= tol
        verdict = bool(cauchy_ok and decreasing)

    return GridReport(interval=(iv.lo, iv.hi), grid_points=int(grid_points),
                      n_values=tuple(int(n) for n in ns),
                      sup_errors=tuple(float(e) for e in sup_errors),
                      verdict=verdict, bound_used=bound_used, tol=float(tol),
                      cauchy_tail=tuple(float(c) for c in cauchy))


def check_equivalent(a, b, interval=(-5.0, 5.0), n_max=50, tol=1e-2, *,
                     grid_points=DEFAULT_GRID):
    """Check that two fundamental sequences share a common primitive limit.

    Uses the larger of the two primitive orders; the lower tower is lifted by
    further anchored integration (numerically when no closed form exists).
    """
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    iv, xs = _grid(interval, grid_points)
    k = max(a.primitive_order, b.primitive_order)
    ns = np.arange(1, n_max + 1)
    sup_diffs = []
    for n in ns:
        va = np.asarray(a.primitive(k, int(n), xs), dtype=float)
        vb = np.asarray(b.primitive(k, int(n), xs), dtype=float)
        sup_diffs.append(float(np.max(np.abs(va - vb))))
    sup_diffs = np.asarray(sup_diffs)
    decreasing = sup_diffs[-1] <= sup_diffs[0] or sup_diffs[0] <= tol
    verdict = bool(sup_diffs[-1] <= tol and decreasing)
    return GridReport(interval=(iv.lo, iv.hi), grid_points=int(grid_points),
                      n_values=tuple(int(n) for n in ns),
                      sup_errors=tuple(sup_diffs),
                      verdict=verdict,
                      bound_used=f"sup |primitive_{k}(a) - primitive_{k}(b)| on grid",
                      tol=float(tol))


def seq_derivative(seq):
    """Differentiate a sequential distribution by shifting the primitive tower.

    The result's term is the old term's x-derivative (closed form when
    available, finite differences otherwise); its level-1 primitive is the old
    term, and the primitive order grows by one.
    """
    if seq.term_derivative is not None:
        new_term = seq.term_derivative
    elif seq.differentiable_terms:
        old_term = seq.term
        new_term = lambda n, x: derivative(lambda t: old_term(n, t), x, 1, max_order=4)
    else:
        raise ValueError("sequence terms are not differentiable; cannot shift the tower")
    return FundamentalSeq(
        term=new_term,
        primitive_order=seq.primitive_order + 1,
        primitives=(seq.term,) + seq.primitives,
        limit_of_primitives=seq.limit_of_primitives,
        term_derivative=None,
        label=f"d/dx {seq.label}",
        panel_hint=seq.panel_hint,
        differentiable_terms=seq.differentiable_terms)


def pair_by_parts(seq, f, *, tol=1e-9, n_ladder=(100, 200, 400, 800)):
    """Pair a sequential distribution with f through k integrations by parts.

    Evaluates (-1)^k * integral of Phi * f^(k) over the support of f, using
    the declared limit Phi when available and otherwise extrapolating the
    integrals of the level-k primitives over n_ladder.
    """
    k = seq.primitive_order
    if k > f.max_derivative_order:
        raise ValueError(f"pairing by parts needs derivative order {k}, "
                         f"but f only supports {f.max_derivative_order}")
    support = Interval.coerce(f.support)
    fk = f if k == 0 else (lambda x: derivative(f, x, k))
    sign = -1.0 if k % 2 else 1.0

    if seq.limit_of_primitives is not None:
        phi = seq.limit_of_primitives
        res = adaptive_quad(lambda x: np.asarray(phi(x), dtype=float) * np.asarray(fk(x), dtype=float),
                            support.lo, support.hi, tol=tol, breakpoints=(0.0,))
        return sign * res.value

    samples = []
    for n in n_ladder:
        res = adaptive_quad(lambda x: np.asarray(seq.primitive(k, n, x), dtype=float)
                            * np.asarray(fk(x), dtype=float),
                            support.lo, support.hi, tol=tol, breakpoints=(0.0,))
        samples.append((float(n), res.value))
    return sign * extrapolate_limit(samples, mode="inverse_param")


def check_zero_off_origin(seq, a, n_max=100, *, grid_points=DEFAULT_GRID,
                          reach=5.0, tol=1e-8):
    """Verify that the sequence represents 0 on |x| >= a (away from the origin).

    Lorentz kernels: the terms themselves go to 0 uniformly, bounded by the
    peak value at |x| = a (the kernel decreases away from 0). Truncated-
    spectrum kernels: the terms oscillate without decay, so the smoothed
    half-steps are compared against the exact step, bounded by the Dirichlet
    tail 2/(pi n a). Anything else: the terms must fall below tol.
    """
    a = float(a)
    if a <= 0.0:
        raise ValueError("check_zero_off_origin requires a > 0")
    half_pts = max(2, int(grid_points) // 2)
    xs_pos = np.linspace(a, a + reach, half_pts)
    xs = np.concatenate([-xs_pos[::-1], xs_pos])
    ns = np.arange(1, int(n_max) + 1)

    sup_errors = []
    if seq.label == "lorentz":
        bound_used = "peak value of the kernel at |x| = a"
        ok = True
        for n in ns:
            sup_val = float(np.max(np.abs(seq.term(int(n), xs))))
            peak = float(lorentz_delta_n(int(n), a))
            sup_errors.append(sup_val)
            ok = ok and sup_val <= peak + 1e-12
        verdict = ok and sup_errors[-1] <= max(tol, float(lorentz_delta_n(int(ns[-1]), a)))
    elif seq.label in ("fourier_kernel", "fourier_step"):
        bound_used = "Dirichlet tail bound 2/(pi n a) on |step_n - step|"
        target = half_step(xs)
        ok = True
        for n in ns:
            sup_val = float(np.max(np.abs(sinc_step(int(n), xs) - target)))
            sup_errors.append(sup_val)
            ok = ok and sup_val <= 2.0 / (math.pi * n * a) + 1e-12
        verdict = ok
    else:
        bound_used = "sup |term(n, x)| below tol"
        for n in ns:
            sup_errors.append(float(np.max(np.abs(seq.term(int(n), xs)))))
        verdict = sup_errors[-1] <= tol

    return GridReport(interval=(a, a + reach), grid_points=2 * half_pts,
                      n_values=tuple(int(n) for n in ns),
                      sup_errors=tuple(sup_errors),
                      verdict=bool(verdict), bound_used=bound_used, tol=float(tol))
