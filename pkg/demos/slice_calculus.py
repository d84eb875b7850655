"""Proper forms, Cauchy-Riemann residuals, and what goes wrong without properness.

Run: python3 demos/slice_calculus.py
"""
import numpy as np

from cullen import calculus as calc
from cullen.calculus import ComplexLikeForm
from cullen.fields import IOTA, SliceFunction
from cullen.series import QSeries

grid = calc.SliceDomain().grid()
F = SliceFunction.from_series(QSeries.random(np.random.default_rng(2), 8))

form = calc.proper_form(F)   # u = 1/2 d/d(iota)(iota F), v = 1/2 d/d(iota) F
for name, fn in [
    ("Cullen operator", lambda p: calc.cullen_operator(F, p)),
    ("CR system on (t, r)", lambda p: calc.cr_residual(form, p)),
    ("modified CR on (alpha, beta)", lambda p: calc.modified_cr_residual(form, p)),
    ("du/d(iota) - iota dv/d(iota)", lambda p: calc.compatibility_residual(form, p)),
    ("iota-derivative identity", lambda p: calc.fundamental_residual(F, p)),
]:
    stats = calc.sweep(fn, pts=grid)
    print(f"{name:32s} max {stats.max_norm:.2e}")

# 1 = 0 + iota * (-iota) is a valid splitting but not the proper one.
witness = ComplexLikeForm(SliceFunction.constant(0.0), -1.0 * IOTA)
stats = calc.sweep(lambda p: calc.compatibility_residual(witness, p), pts=grid)
print(f"non-proper splitting of 1: compatibility residual {stats.max_norm:.6f} everywhere")

# The same checks with finite differences instead of closed-form partials.
G = SliceFunction.from_series(F.series, backend="fd")
print("finite-difference certificate:", calc.is_hyperholomorphic(G))
