"""Three ways to multiply regular functions, compared at the same points.

1. coefficient convolution, then evaluation;
2. the closed formula f(p) g(f(p)^-1 p f(p));
3. the pointwise product of proper (u, v) forms on the spherical chart.

Run: python3 demos/three_products.py
"""
import numpy as np

from cullen import calculus as calc
from cullen.fields import SliceFunction, exp_field, mobius_field
from cullen.quaternion import qnorm
from cullen.series import QSeries, closed_formula_eval, evaluate, star_mul

rng = np.random.default_rng(1)
N = 8
f, g = QSeries.random(rng, N), QSeries.random(rng, N)

grid = calc.SliceDomain(counts=(4, 4, 6, 4)).grid()
q = grid.quaternion()

# Truncation matters: f*g has degree 2N, so pad before multiplying.
conv = evaluate(star_mul(f.with_order(2 * N), g.with_order(2 * N)), q)
closed = closed_formula_eval(f, g, q)
forms = calc.star_pointwise(SliceFunction.from_series(f), SliceFunction.from_series(g), grid)
forms_fd = calc.star_pointwise(SliceFunction.from_series(f, "fd"),
                               SliceFunction.from_series(g, "fd"), grid)


def rel(a, b):
    return float(np.max(qnorm(a - b) / (1 + qnorm(b))))


print(f"closed formula vs convolution     {rel(closed, conv):.2e}")
print(f"(u, v) forms vs convolution       {rel(forms, conv):.2e}")
print(f"(u, v) forms, finite differences  {rel(forms_fd, conv):.2e}")

# Truncated convolution alone misses the degrees above N.
short = evaluate(star_mul(f, g), q)
print(f"unpadded convolution vs exact     {rel(short, conv):.2e}")

# Functions that are not stored series: exp(p) a and (p - c)^-1 b.
a, b = np.array([0.3, 1, 0, -0.5]), np.array([1.0, 0, 2, 0])
E, M = exp_field(a), mobius_field(-2.0, b)
prod = calc.star_pointwise(E, M, grid)
print("exp * mobius at the first grid point:", prod.reshape(-1, 4)[0])
