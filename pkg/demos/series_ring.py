"""Truncated quaternionic series under the regular product.

Run: python3 demos/series_ring.py
"""
import numpy as np

from cullen.quaternion import I, J
from cullen.series import (
    QSeries,
    reciprocal,
    regular_conjugate,
    star_mul,
    symmetrization,
)

np.set_printoptions(precision=4, suppress=True)

# Coefficients sit on the right: p*i means the series whose degree-1 coefficient is i.
p_i = QSeries.monomial(1, I, order=4)
p_j = QSeries.monomial(1, J, order=4)

print("(p i) * (p j) =", star_mul(p_i, p_j))
print("(p j) * (p i) =", star_mul(p_j, p_i))   # the sign flips: the ring is noncommutative

# Conjugation acts on coefficients and reverses products.
rng = np.random.default_rng(0)
f, g = QSeries.random(rng, 6), QSeries.random(rng, 6)
lhs = regular_conjugate(star_mul(f, g))
rhs = star_mul(regular_conjugate(g), regular_conjugate(f))
print("max |(f*g)^c - g^c*f^c| =", lhs.max_abs_diff(rhs))

# f^c * f has real coefficients, which is what makes the reciprocal cheap.
one_plus_pi = QSeries(np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0]]))
print("symmetrization of 1 + p i:", symmetrization(one_plus_pi))   # 1 + p^2

h = QSeries(np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]))
r = reciprocal(h)
print("reciprocal of 1 + p i to order 4:\n", r.coeffs)
print("h * h^-1 =", star_mul(h, r))
