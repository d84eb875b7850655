import numpy as np
import pytest

from cullen import calculus as calc
from cullen.calculus import ComplexLikeForm, SliceDomain
from cullen.errors import OutOfDomain, PolarSingularity, SymmetrizationZero
from cullen.fields import IOTA, CoordField, Points, SliceFunction, csc_derivative, exp_field
from cullen.quaternion import I, ONE, qconj, qinv, qmul, qnorm
from cullen.series import QSeries, evaluate, star_mul

GRID = SliceDomain(counts=(3, 3, 4, 3)).grid()
T, R, ALPHA, BETA = (CoordField(a) for a in ("t", "r", "alpha", "beta"))


def series_field(coeffs, backend="analytic"):
    return SliceFunction.from_series(QSeries(np.asarray(coeffs, float)), backend)


def power(n, a=1.0, backend="analytic"):
    return SliceFunction.from_series(QSeries.monomial(n, a, max(n, 1)), backend)


def scalar(values):
    out = np.zeros(np.shape(values) + (4,))
    out[..., 0] = values
    return out


def worst(values):
    return float(np.max(calc.residual_norms(values)))


# ---------------------------------------------------------------- Cullen operator

def test_cullen_operator_examples():
    assert worst(calc.cullen_operator(SliceFunction.constant([1, 2, 3, 4]), GRID)) == 0.0
    for n in range(6):
        assert worst(calc.cullen_operator(power(n, [0.3, 1, -1, 2]), GRID)) <= 1e-10
    conj_p = T - R * IOTA
    assert np.allclose(calc.cullen_operator(conj_p, GRID), 2 * ONE, atol=1e-14)


def test_domain_errors():
    with pytest.raises(OutOfDomain):
        calc.cullen_operator(power(1), Points(0.0, 0.0, 0.5, 1.0))
    with pytest.raises(PolarSingularity):
        calc.d_iota(power(1), Points(0.0, 1.0, 0.5, 0.0))


# ---------------------------------------------------------------- d/d(iota)

def test_d_iota_examples():
    assert worst(calc.d_iota(SliceFunction.constant(1.0), GRID)) == 0.0
    assert np.allclose(calc.d_iota(IOTA, GRID), 2 * ONE, atol=1e-14)
    assert np.allclose(calc.d_iota(power(1), GRID), scalar(2 * GRID.r), atol=1e-14)


def test_proper_form_examples():
    a = np.array([0.5, -1, 2, 3])
    form = calc.proper_form(SliceFunction.constant(a))
    assert np.allclose(form.u(GRID), a) and np.allclose(form.v(GRID), 0)
    form = calc.proper_form(power(1))
    assert np.allclose(form.u(GRID), scalar(GRID.t)) and np.allclose(form.v(GRID), scalar(GRID.r))
    form = calc.proper_form(power(2))
    t, r = GRID.t, GRID.r
    assert np.allclose(form.u(GRID), scalar(t * t - r * r), atol=1e-13)
    assert np.allclose(form.v(GRID), scalar(2 * t * r), atol=1e-13)


def test_proper_form_recomposes():
    F = SliceFunction.from_series(QSeries.random(np.random.default_rng(0), 8))
    assert np.allclose(calc.proper_form(F).field()(GRID), F(GRID), atol=1e-12)


# ---------------------------------------------------------------- CR systems

def test_cr_residual_examples():
    zero = lambda res: max(worst(res[0]), worst(res[1]))  # noqa: E731
    assert zero(calc.cr_residual(ComplexLikeForm(T, R), GRID)) == 0.0
    assert zero(calc.cr_residual(ComplexLikeForm(T * T - R * R, 2.0 * (T * R)), GRID)) <= 1e-14
    first, second = calc.cr_residual(ComplexLikeForm(R, T), GRID)
    assert np.allclose(first, 0) and np.allclose(second, 2 * ONE)


def test_modified_cr_examples():
    res = calc.modified_cr_residual(ComplexLikeForm(T * T - R * R, 2.0 * (T * R)), GRID)
    assert worst(res[0]) == 0.0 and worst(res[1]) == 0.0

    def log_tan(t, r, a, b, order=None):
        return np.log(np.tan(b / 2))

    def log_tan_partials(t, r, a, b, order):
        if order[:3] != (0, 0, 0):
            return np.zeros_like(b)
        return csc_derivative(b, order[3] - 1)

    v = calc.real_field(log_tan, "analytic", partials=log_tan_partials)
    res = calc.modified_cr_residual(ComplexLikeForm(ALPHA, v), GRID)
    assert max(worst(res[0]), worst(res[1])) <= 1e-14

    first, second = calc.modified_cr_residual(ComplexLikeForm(ALPHA, BETA), GRID)
    assert worst(first) == 0.0
    assert np.allclose(second, scalar(1 / np.sin(GRID.beta) - 1))


def test_compatibility_examples():
    assert worst(calc.compatibility_residual(calc.proper_form(power(1)), GRID)) <= 1e-14
    assert worst(calc.compatibility_residual(calc.proper_form(power(2)), GRID)) <= 1e-10
    witness = ComplexLikeForm(SliceFunction.constant(0.0), -1.0 * IOTA)
    res = calc.compatibility_residual(witness, GRID)
    assert np.allclose(res, 2 * IOTA(GRID), atol=1e-14)
    assert np.allclose(qnorm(res), 2.0, atol=1e-9)


# ---------------------------------------------------------------- pointwise products

def test_star_pointwise_examples():
    a, b = np.array([1.0, 2, 0, -1]), np.array([0.5, 0, 3, 1])
    got = calc.star_pointwise(SliceFunction.constant(a), SliceFunction.constant(b), GRID)
    assert np.allclose(got, qmul(a, b))

    rng = np.random.default_rng(1)
    f, g = QSeries.random(rng, 6), QSeries.random(rng, 6)
    ref = evaluate(star_mul(f.with_order(12), g.with_order(12)), GRID.quaternion())
    for backend, tol in (("analytic", 1e-9), ("fd", 1e-4)):
        F, G = (SliceFunction.from_series(s, backend) for s in (f, g))
        got = calc.star_pointwise(F, G, GRID)
        assert np.max(qnorm(got - ref) / (1 + qnorm(ref))) <= tol

    real = QSeries(f.coeffs * np.array([1.0, 0, 0, 0]))
    F, G = SliceFunction.from_series(real), SliceFunction.from_series(g)
    assert np.allclose(calc.star_pointwise(F, G, GRID), qmul(F(GRID), G(GRID)), atol=1e-12)


def test_star_form_requires_proper():
    with pytest.raises(ValueError):
        calc._require_proper(ComplexLikeForm(T, R))


def test_conj_pointwise_examples():
    a = np.array([1.0, 2, 3, 4])
    assert np.allclose(calc.conj_pointwise(SliceFunction.constant(a), GRID), qconj(a))
    q = GRID.quaternion()
    got = calc.conj_pointwise(power(3, a), GRID)
    assert np.allclose(got, evaluate(QSeries.monomial(3, qconj(a), 3), q), atol=1e-12)
    assert np.allclose(calc.conj_pointwise(power(1), GRID), q, atol=1e-14)


def test_symm_pointwise_examples():
    a = np.array([1.0, 2, 3, 4])
    assert np.allclose(calc.symm_pointwise(SliceFunction.constant(a), GRID), scalar(30.0))
    q = GRID.quaternion()
    assert np.allclose(calc.symm_pointwise(power(1), GRID), qmul(q, q), atol=1e-13)


def test_inner_product_identity():
    rng = np.random.default_rng(2)
    u, v = rng.standard_normal((2, 50, 4))
    e1, e2, e3 = calc.inner_product_identity(u, v)
    assert np.abs(e1 - e3).max() <= 1e-12 and np.abs(e2 - e3).max() <= 1e-12


def test_recip_pointwise_examples():
    a = np.array([1.0, 2, 3, 4])
    assert np.allclose(calc.recip_pointwise(SliceFunction.constant(a), GRID), qinv(a))
    q = GRID.quaternion()
    assert np.allclose(calc.recip_pointwise(power(1), GRID), qinv(q), atol=1e-13)
    # f = p - i has f^s = p^2 + 1, which vanishes on the unit sphere of imaginaries
    f = series_field([-I, ONE])
    with pytest.raises(SymmetrizationZero):
        calc.recip_pointwise(f, Points(0.0, 1.0, 0.3, 1.2))


# ---------------------------------------------------------------- Fueter and Laplacian

def test_fueter_examples():
    for backend in ("analytic", "fd"):
        assert worst(calc.fueter_dl(SliceFunction.constant([1, 2, 3, 4]) if backend == "analytic"
                                    else power(0, [1, 2, 3, 4], "fd"), GRID)) <= 1e-10
        assert np.allclose(calc.fueter_dl(power(1, backend=backend), GRID), -2 * ONE, atol=1e-9)
        assert np.allclose(calc.fueter_dl(power(2, backend=backend), GRID),
                           scalar(-4 * GRID.t), atol=1e-8)


def test_fueter_chain_rule_for_non_series():
    # exp is regular but not a stored series: D_l exp(p) = -2 v / r
    E = exp_field([0.2, 1, -0.5, 0.3])
    assert worst(calc.fueter_slice_residual(E, GRID)) <= 1e-12


def test_laplacian_examples():
    assert worst(calc.laplacian4(SliceFunction.constant([1, 2, 3, 4]), GRID)) == 0.0
    assert np.allclose(calc.laplacian4(power(2), GRID), -4 * ONE, atol=1e-12)
    assert np.allclose(calc.laplacian4(T * T + R * R, GRID), 8 * ONE, atol=1e-12)
    assert np.allclose(calc.laplacian_cartesian(power(2), GRID), -4 * ONE, atol=1e-12)


def test_fueter_laplacian_series():
    F = SliceFunction.from_series(QSeries.random(np.random.default_rng(3), 8))
    assert worst(calc.fueter_dl_laplacian(F, GRID)) <= 1e-7
    assert worst(calc.fueter_slice_residual(F, GRID)) <= 1e-8


def test_angular_factorization():
    phi = CoordField("beta") * CoordField("alpha") * CoordField("beta")
    diff = calc.angular_laplacian(phi, GRID) - calc.angular_factorized(phi, GRID)
    assert worst(diff) <= 1e-12


# ---------------------------------------------------------------- identities

@pytest.mark.parametrize("backend,tol", [("analytic", 1e-9), ("fd", 1e-4)])
def test_fundamental_property(backend, tol):
    F = SliceFunction.from_series(QSeries.random(np.random.default_rng(4), 6), backend)
    scale = 1 + np.max(qnorm(F(GRID)))
    assert worst(calc.fundamental_residual(F, GRID)) / scale <= tol


def test_fundamental_property_non_regular():
    F = SliceFunction.from_evaluator(
        lambda t, r, a, b: np.stack([np.cos(a) * r, t * np.sin(b), a * b, np.exp(-t)], -1))
    assert worst(calc.fundamental_residual(F, GRID)) <= 1e-4


def test_product_identities():
    rng = np.random.default_rng(5)
    F, G, H = (SliceFunction.from_series(QSeries.random(rng, 5)) for _ in range(3))
    assert worst(calc.product_rule_residual(F, G, GRID)) <= 1e-8
    u_res, v_res = calc.properness_residual(F, G, GRID)
    assert max(worst(u_res), worst(v_res)) <= 1e-8
    prod = calc.star_form(calc.proper_form(F), calc.proper_form(G))
    assert max(map(worst, calc.modified_cr_residual(prod, GRID))) <= 1e-9
    conj = calc.conj_form(calc.proper_form(F))
    assert max(map(worst, calc.modified_cr_residual(conj, GRID))) <= 1e-9
    assert worst(calc.compatibility_residual(conj, GRID)) <= 1e-9
    left = calc.star_field(calc.star_field(F, G), H)(GRID)
    assert np.max(qnorm(calc.associativity_residual(F, G, H, GRID)) / (1 + qnorm(left))) <= 1e-8


def test_is_hyperholomorphic():
    F = SliceFunction.from_series(QSeries.random(np.random.default_rng(6), 6))
    domain = SliceDomain(counts=(2, 2, 3, 3))
    assert calc.is_hyperholomorphic(F, domain)
    assert calc.is_hyperholomorphic(SliceFunction.from_series(F.series, "fd"), domain)
    assert not calc.is_hyperholomorphic(ALPHA + IOTA * BETA, domain)


def test_sweep_reports_worst_point():
    stats = calc.sweep(lambda p: scalar(p.r * p.t), pts=GRID)
    assert stats.max_norm == pytest.approx(1.5)
    assert abs(stats.argmax_point[0]) == pytest.approx(1.0) and stats.argmax_point[1] == pytest.approx(1.5)


def test_domain_validation():
    with pytest.raises(ValueError):
        SliceDomain(r_range=(0.0, 1.0))
    with pytest.raises(ValueError):
        SliceDomain(beta_range=(0.0, 1.0))
    assert SliceDomain().contains(GRID)
