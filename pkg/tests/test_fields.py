import math

import numpy as np
import pytest

from cullen.errors import OutOfDomain, PolarSingularity
from cullen.fields import (
    CSC_BETA,
    IOTA,
    SIN_BETA,
    ComponentField,
    CoordField,
    FDField,
    Points,
    SliceFunction,
    csc_derivative,
    exp_field,
    iota_partial,
    iota_times,
    mobius_field,
)
from cullen.quaternion import iota_vec, qmul, to_cartesian
from cullen.series import QSeries, evaluate


@pytest.fixture
def pts():
    rng = np.random.default_rng(0)
    return Points(rng.uniform(-1, 1, 30), rng.uniform(0.3, 1.4, 30),
                  rng.uniform(0, 2 * np.pi, 30), rng.uniform(0.4, 2.7, 30))


def fd(fn, pts, axis, h=1e-5):
    d = [0.0] * 4
    d[axis] = h
    up = fn(pts.shifted(d))
    d[axis] = -h
    return (up - fn(pts.shifted(d))) / (2 * h)


def test_points_domain_checks():
    Points(0.0, 0.5, 1.0, 1.0).check()
    with pytest.raises(OutOfDomain):
        Points(0.0, 0.0, 1.0, 1.0).check()
    with pytest.raises(PolarSingularity):
        Points(0.0, 0.5, 1.0, 1e-4).check()
    with pytest.raises(PolarSingularity):
        Points(0.0, 2.0, 1.0, 1.0).check(margin=1.0)


@pytest.mark.parametrize("na,nb", [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (2, 2), (3, 1)])
def test_iota_partials_against_differences(pts, na, nb):
    base = iota_partial(pts.alpha, pts.beta, na, nb)
    h = 1e-5
    up = iota_partial(pts.alpha, pts.beta + h, na, max(nb - 1, 0)) if nb else \
        iota_partial(pts.alpha + h, pts.beta, na - 1, nb)
    dn = iota_partial(pts.alpha, pts.beta - h, na, max(nb - 1, 0)) if nb else \
        iota_partial(pts.alpha - h, pts.beta, na - 1, nb)
    assert np.allclose(base, (up - dn) / (2 * h), atol=1e-8)


def test_iota_partial_zero_order_is_iota(pts):
    assert np.allclose(iota_partial(pts.alpha, pts.beta, 0, 0), iota_vec(pts.alpha, pts.beta))


@pytest.mark.parametrize("n", range(1, 5))
def test_csc_derivatives(n):
    beta = np.linspace(0.4, 2.7, 9)
    h = 1e-5
    num = (csc_derivative(beta + h, n - 1) - csc_derivative(beta - h, n - 1)) / (2 * h)
    assert np.allclose(csc_derivative(beta, n), num, rtol=1e-7, atol=1e-7)


def test_trig_leaves(pts):
    assert np.allclose(SIN_BETA(pts)[..., 0], np.sin(pts.beta))
    assert np.allclose(CSC_BETA.partial(pts, (0, 0, 0, 1))[..., 0],
                       -np.cos(pts.beta) / np.sin(pts.beta) ** 2)


def test_series_field_matches_evaluation(pts):
    f = QSeries.random(np.random.default_rng(1), 8)
    F = SliceFunction.from_series(f)
    assert F.series is f
    assert np.abs(F(pts) - evaluate(f, pts.quaternion())).max() <= 1e-12


@pytest.mark.parametrize("axis", range(4))
def test_series_field_partials(pts, axis):
    f = QSeries.random(np.random.default_rng(2), 6)
    F = SliceFunction.from_series(f)
    order = tuple(1 if k == axis else 0 for k in range(4))
    assert np.allclose(F.partial(pts, order), fd(F, pts, axis), atol=1e-8)


def test_product_rule_and_cache(pts):
    F = SliceFunction.from_series(QSeries.random(np.random.default_rng(3), 4))
    G = IOTA * F
    for axis in range(4):
        order = tuple(1 if k == axis else 0 for k in range(4))
        assert np.allclose(G.partial(pts, order), fd(G, pts, axis), atol=1e-8)
    first = G.partial(pts, (0, 0, 1, 1))
    assert G.partial(pts, (0, 0, 1, 1)) is first


def test_fd_backend_agrees_with_analytic(pts):
    f = QSeries.random(np.random.default_rng(4), 8)
    A = SliceFunction.from_series(f)
    D = SliceFunction.from_series(f, backend="fd")
    assert D.backend == "fd" and D.series is f
    for order in [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (0, 0, 2, 0), (0, 1, 0, 1)]:
        a, d = A.partial(pts, order), D.partial(pts, order)
        assert np.abs(a - d).max() / (1 + np.abs(a).max()) < 1e-4


def test_fd_leaf_iota_times_stays_leaf():
    F = SliceFunction.from_series(QSeries.one(2), backend="fd")
    assert isinstance(iota_times(F), FDField)


def test_exp_field_matches_truncated_series(pts):
    a = np.array([0.5, -0.2, 1.0, 0.3])
    coeffs = np.array([a / math.factorial(n) for n in range(25)])
    series = SliceFunction.from_series(QSeries(coeffs))
    E = exp_field(a)
    assert np.allclose(E(pts), series(pts), atol=1e-12)
    assert np.allclose(E.partial(pts, (0, 1, 0, 1)), series.partial(pts, (0, 1, 0, 1)), atol=1e-10)


def test_mobius_field_is_inverse(pts):
    M = mobius_field(2.5)
    q = to_cartesian(*pts.coords())
    shifted = q - np.array([2.5, 0, 0, 0])
    assert np.allclose(qmul(shifted, M(pts)), [1, 0, 0, 0], atol=1e-12)


def test_component_and_coord_fields(pts):
    assert np.allclose(CoordField("r")(pts)[..., 0], pts.r)
    assert np.allclose(CoordField("beta").partial(pts, (0, 0, 0, 1))[..., 0], 1.0)
    iz = ComponentField(IOTA, 3)
    assert np.allclose(iz(pts)[..., 0], np.cos(pts.beta))
    assert np.allclose(iz(pts)[..., 1:], 0.0)


def test_fd_orders_limited(pts):
    F = SliceFunction.from_evaluator(lambda t, r, a, b: np.stack([t, r, a, b], -1))
    with pytest.raises(ValueError):
        F.partial(pts, (5, 0, 0, 0))
    with pytest.raises(ValueError):
        SliceFunction.from_evaluator(lambda *c: 0, backend="analytic")
