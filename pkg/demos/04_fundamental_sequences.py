"""Sequential distributions: convergence certificates on primitive towers.

A sequence of continuous functions represents a distribution when some level
of its anchored primitive tower converges almost uniformly. The kernel
sequences need two integrations (their first primitives have no continuous
uniform limit through the origin); the two kernel families land on the same
kink |x|/2, which makes them equivalent as distributions.
"""

import numpy as np

from deltakit import (bump, check_equivalent, check_fundamental,
                      check_zero_off_origin, lorentz_delta_seq, pair_by_parts,
                      scaled_cos_seq, seq_derivative, sinc_delta_seq,
                      sinc_step_seq, zero_seq)

fourier = sinc_delta_seq()
lorentz = lorentz_delta_seq()

rep = check_fundamental(fourier, (-5, 5), n_max=50, tol=0.02)
print(f"kernel sequence, second primitives vs |x|/2: verdict={rep.verdict}")
print(f"  sup errors at n=1,10,50: {rep.sup_errors[0]:.4f}, "
      f"{rep.sup_errors[9]:.4f}, {rep.sup_errors[-1]:.4f}")

rep1 = check_fundamental(fourier, (-1, 1), n_max=60, tol=0.02, order=1)
print(f"same sequence checked one level down (smoothed steps): verdict={rep1.verdict}"
      "  <- no continuous uniform limit through 0")

eq = check_equivalent(fourier, lorentz, (-5, 5), n_max=60, tol=0.05)
print(f"\nfourier ~ lorentz at the kink level: verdict={eq.verdict}, "
      f"final sup gap {eq.sup_errors[-1]:.4f}")

eq0 = check_equivalent(scaled_cos_seq(), zero_seq(), (-5, 5), n_max=50, tol=0.05)
print(f"n*cos(nx) ~ 0 (two integrations flatten it): verdict={eq0.verdict}")

neq = check_equivalent(fourier, zero_seq(), (-5, 5), n_max=30, tol=0.05)
print(f"kernel sequence ~ 0: verdict={neq.verdict}  <- the kink limit |x|/2 is not 0")

d = seq_derivative(sinc_step_seq())
xs = np.linspace(-2, 2, 5)
print("\ndifferentiating the step sequence shifts the tower; its terms are the kernel:")
print("  d(step).term(3, xs)     =", np.round(d.term(3, xs), 5))
print("  kernel values            =", np.round(fourier.term(3, xs), 5))

f = bump(-2.0, -1.0, 1.0, 2.0)
print(f"\npairing by parts (two integrations against f''): {pair_by_parts(fourier, f):.9f}"
      f"  (target f(0) = {f(0.0)})")

z = check_zero_off_origin(lorentz, 0.5, n_max=100)
print(f"\naway from the origin the lorentz terms vanish uniformly: verdict={z.verdict}")
print(f"  sup at n=100 over |x| >= 0.5: {z.sup_errors[-1]:.5f} "
      f"(bound 4/(100 pi) = {4/(100*np.pi):.5f})")
