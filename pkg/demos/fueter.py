"""The left Fueter operator and the 4D Laplacian on regular series.

Run: python3 demos/fueter.py
"""
import numpy as np

from cullen import calculus as calc
from cullen.fields import SliceFunction
from cullen.series import QSeries

grid = calc.SliceDomain(counts=(3, 3, 4, 3)).grid()
p2 = SliceFunction.from_series(QSeries.monomial(2, 1.0, 2))
print("D_l p^2 at t = -1, 0, 1 :", calc.fueter_dl(p2, grid)[:, 0, 0, 0, 0])   # -4t
print("Laplacian of p^2        :", calc.laplacian4(p2, grid).reshape(-1, 4)[0])  # -4

# D_l F = -2 v / r for regular F, so F is not Fueter-regular, but Delta F is.
for degree in (3, 5, 8):
    F = SliceFunction.from_series(QSeries.random(np.random.default_rng(degree), degree))
    slice_id = calc.sweep(lambda p: calc.fueter_slice_residual(F, p), pts=grid).max_norm
    dl_lap = calc.sweep(lambda p: calc.fueter_dl_laplacian(F, p), pts=grid).max_norm
    print(f"degree {degree}: |D_l F + 2v/r| {slice_id:.1e}   |D_l Delta F| {dl_lap:.1e}")

# The angular part of the Laplacian factors into two first-order operators.
phi = calc.real_field(lambda t, r, a, b: np.cos(2 * a) * np.sin(b) ** 2, "fd")
diff = calc.angular_laplacian(phi, grid) - calc.angular_factorized(phi, grid)
print(f"angular factorization, finite differences: {np.abs(diff).max():.1e}")
