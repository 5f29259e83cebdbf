"""Two regularizations of the delta functional and their primitive towers.

The sharp spectral truncation gives the oscillating kernel sin(Rx)/(pi x);
exponential damping of the spectrum gives the Lorentz kernel. Neither
converges pointwise to anything useful, but their anchored primitives do:
the first primitives approach the half-step sign(x)/2 and the second
primitives approach the kink |x|/2, uniformly.
"""

import numpy as np

from deltakit import (half_abs, half_step, lorentz_delta_n, lorentz_kink,
                      lorentz_step, sinc_delta, sinc_kink, sinc_step)

xs = np.array([-2.0, -0.5, 0.0, 0.5, 2.0])

print("kernel values (rows: parameter, cols: x = -2, -0.5, 0, 0.5, 2)")
for n in (1, 5, 20):
    print(f"  sinc    n={n:3d}:", np.round(sinc_delta(n, xs), 6))
    print(f"  lorentz n={n:3d}:", np.round(lorentz_delta_n(n, xs), 6))

print("\nthe kernels do not settle down as n grows, but the primitives do:")
for n in (5, 50, 500):
    step_gap = np.max(np.abs(sinc_step(n, xs[xs != 0]) - half_step(xs[xs != 0])))
    kink_gap = np.max(np.abs(sinc_kink(n, xs) - half_abs(xs)))
    print(f"  n={n:4d}: sup|step_n - step| = {step_gap:.5f}   "
          f"sup|kink_n - |x|/2| = {kink_gap:.6f}  (bound 2/(n pi) = {2/(n*np.pi):.6f})")

print("\nsame story for the lorentz tower:")
for n in (5, 50, 500):
    step_gap = np.max(np.abs(lorentz_step(n, xs[xs != 0]) - half_step(xs[xs != 0])))
    kink_gap = np.max(np.abs(lorentz_kink(n, xs) - half_abs(xs)))
    print(f"  n={n:4d}: sup|step_n - step| = {step_gap:.5f}   "
          f"sup|kink_n - |x|/2| = {kink_gap:.6f}")

print("\nnote the peak growth: kernel(0) = n/pi for both families")
for n in (1, 10, 100):
    print(f"  n={n:3d}: sinc(0) = {sinc_delta(n, 0.0):.4f}, "
          f"lorentz(0) = {lorentz_delta_n(n, 0.0):.4f}, n/pi = {n/np.pi:.4f}")
