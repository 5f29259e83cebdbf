"""Run every named certificate and emit a figure dataset.

Each certificate re-verifies one quantitative bound numerically (uniform kink
error, Lorentz rate majorant, off-origin decay, Fubini order agreement, sine
integral tail, and the half-angle rewrite of the sine integral). The same
checks back the `deltakit certify` subcommand.
"""

import io
import time
from contextlib import redirect_stdout

from deltakit import certificate_names, run_certificate
from deltakit.cli import main

print("certificates:")
for name in certificate_names():
    t0 = time.time()
    report = run_certificate(name)
    status = "pass" if report.passed else "FAIL"
    print(f"  {name:16s} {status}  ({time.time() - t0:4.1f}s)  {report.summary}")

print("\nthe same checks through the command line (exit code 0 = pass):")
buf = io.StringIO()
with redirect_stdout(buf):
    code = main(["certify", "lemma4", "--params", "50"])
print(f"  deltakit certify lemma4 --params 50  -> exit {code}")

print("\nfigure dataset emission (CSV columns x,value,series):")
with redirect_stdout(buf):
    code = main(["figure", "--fig", "6", "--grid", "201", "--out", "fig6.csv"])
print(f"  deltakit figure --fig 6 --grid 201 --out fig6.csv  -> exit {code}")
with open("fig6.csv", encoding="utf-8") as fh:
    head = [next(fh).rstrip() for _ in range(3)]
print("  " + "\n  ".join(head))
