"""Verification suites and the runner that assembles them into a report.

Each suite draws its own random stream from ``(seed, suite index)``, so results
do not depend on which other suites run or in what order they complete.

Residual kinds:

``absolute``
    max over samples of the residual norm.
``relative``
    value comparisons use ``|a - b| / (1 + |b|)`` pointwise; differential
    identities on the finite-difference backend are divided by
    ``1 + sup |F|`` over the grid (truncation error scales with the field).
"""
from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .. import calculus as calc
from ..errors import UnknownSuite
from ..fields import (
    IOTA,
    ComponentField,
    CoordField,
    Points,
    SliceFunction,
    exp_field,
    mobius_field,
)
from ..quaternion import (
    BASIS,
    I,
    J,
    K,
    as_qarray,
    from_imag,
    iota_vec,
    qconj,
    qmul,
    qnorm,
    real_times,
    to_spherical,
)
from ..series import (
    QSeries,
    closed_formula_eval,
    evaluate,
    random_ball,
    reciprocal,
    regular_conjugate,
    slice_components,
    star_mul,
    symmetrization,
)
from .config import SUITES, SuiteConfig
from .report import Check, Observation, SuiteResult, VerificationReport

log = logging.getLogger(__name__)


# ------------------------------------------------------------------ helpers

def random_points(rng: np.random.Generator, n: int, r_min: float = 0.1,
                  r_max: float = 1.5, t_range=(-1.0, 1.0)) -> np.ndarray:
    """Quaternions ``t + r iota`` with ``r`` in ``[r_min, r_max]`` and iota uniform on S^2."""
    t = rng.uniform(*t_range, n)
    r = rng.uniform(r_min, r_max, n)
    d = rng.standard_normal((n, 3))
    d /= np.linalg.norm(d, axis=1, keepdims=True)
    return t[:, None] * BASIS[0] + real_times(r, from_imag(d))


def rel_err(a, b) -> float:
    """``max |a - b| / (1 + |b|)``."""
    a, b = as_qarray(a), as_qarray(b)
    return float(np.max(qnorm(a - b) / (1.0 + qnorm(b))))


def coeff_err(f: QSeries, g: QSeries) -> float:
    return f.max_abs_diff(g)


def value_at(f: SliceFunction, q) -> np.ndarray:
    """Evaluate a chart field at Cartesian quaternions."""
    return f(Points(*to_spherical(q)))


class Context:
    def __init__(self, cfg: SuiteConfig, suite: str):
        self.cfg = cfg
        self.suite = suite
        self.rng = np.random.default_rng([cfg.seed, SUITES.index(suite)])
        self.result = SuiteResult(suite=suite, seed=cfg.seed)
        self.pts = cfg.domain.grid()

    @property
    def order(self) -> int:
        return self.cfg.order

    def check(self, name: str, residual: float, backend: str = "analytic",
              kind: str = "absolute", tag: bool = False, **detail) -> Check:
        label = f"{name}[{backend}]" if tag else name
        c = Check(label, float(residual), self.cfg.tolerance(name, backend), kind, detail)
        self.result.checks.append(c)
        return c

    def observe(self, name: str, residual: float, **detail) -> None:
        self.result.observations.append(Observation(name, float(residual), detail))

    def series(self, n: int, order: int | None = None, min_a0: float = 0.0) -> list:
        order = self.order if order is None else order
        return [QSeries.random(self.rng, order, min_a0=min_a0) for _ in range(n)]

    def quats(self, n: int) -> np.ndarray:
        return random_ball(self.rng, n)

    def backends(self) -> tuple:
        return self.cfg.backends()

    def fields(self, series_list, backend: str) -> list:
        return [SliceFunction.from_series(f, backend, h=self.cfg.fd_step) for f in series_list]

    def grid_max(self, fn) -> float:
        return calc.sweep(fn, pts=self.pts).max_norm

    def scale(self, *fields) -> float:
        return 1.0 + max(float(np.max(qnorm(f(self.pts)))) for f in fields)

    def pde(self, fn, backend: str, *fields):
        """Grid max of a differential residual, with its kind for ``backend``."""
        res = self.grid_max(fn)
        if backend == "fd":
            return res / self.scale(*fields), "relative"
        return res, "absolute"


# ------------------------------------------------------------------ ring laws

def ring_laws(ctx: Context) -> None:
    n, N = ctx.cfg.count("ring-laws"), ctx.order
    one = QSeries.one(N)
    assoc = dist = neutral = inv = add = anti = 0.0
    for _ in range(n):
        f, g, h = ctx.series(3)
        assoc = max(assoc, coeff_err(star_mul(star_mul(f, g), h), star_mul(f, star_mul(g, h))))
        dist = max(dist,
                   coeff_err(star_mul(f, g + h), star_mul(f, g) + star_mul(f, h)),
                   coeff_err(star_mul(f + g, h), star_mul(f, h) + star_mul(g, h)))
        neutral = max(neutral, coeff_err(star_mul(f, one), f), coeff_err(star_mul(one, f), f))
        inv = max(inv, coeff_err(regular_conjugate(regular_conjugate(f)), f))
        add = max(add, coeff_err(regular_conjugate(f + g),
                                 regular_conjugate(f) + regular_conjugate(g)))
        anti = max(anti, coeff_err(regular_conjugate(star_mul(f, g)),
                                   star_mul(regular_conjugate(g), regular_conjugate(f))))
    ctx.check("star-associativity", assoc, samples=n, order=N)
    ctx.check("star-distributivity", dist, samples=n, order=N)
    ctx.check("star-neutral", neutral, samples=n, order=N)

    a, b = ctx.quats(2)
    ctx.check("star-constants", float(np.max(np.abs(
        star_mul(QSeries.constant(a, N), QSeries.constant(b, N)).coeffs[0] - qmul(a, b)))))

    powers = mixed = conj_mono = 0.0
    for nn in range(N + 1):
        for m in range(N + 1 - nn):
            pn, pm = QSeries.monomial(nn, 1.0, N), QSeries.monomial(m, 1.0, N)
            target = QSeries.monomial(nn + m, 1.0, N)
            powers = max(powers, coeff_err(star_mul(pn, pm), target),
                         coeff_err(star_mul(pm, pn), target))
            a, b = ctx.quats(2)
            mixed = max(mixed, coeff_err(
                star_mul(QSeries.monomial(nn, a, N), QSeries.monomial(m, b, N)),
                QSeries.monomial(nn + m, qmul(a, b), N)))
        a = ctx.quats(1)[0]
        conj_mono = max(conj_mono,
                        coeff_err(regular_conjugate(QSeries.monomial(nn, a, N)),
                                  QSeries.monomial(nn, qconj(a), N)),
                        coeff_err(regular_conjugate(QSeries.monomial(nn, 1.0, N)),
                                  QSeries.monomial(nn, 1.0, N)))
    ctx.check("star-powers", powers, order=N)
    ctx.check("star-mixed-degree", mixed, order=N)

    # (p i) * (p j) = p^2 k while (p j) * (p i) = -p^2 k
    pi_, pj_ = QSeries.monomial(1, I, N), QSeries.monomial(1, J, N)
    witness = max(coeff_err(star_mul(pi_, pj_), QSeries.monomial(2, K, N)),
                  coeff_err(star_mul(pj_, pi_), QSeries.monomial(2, -K, N)))
    ctx.check("star-noncommutative", witness)
    ctx.check("conj-monomials", conj_mono, order=N)
    ctx.check("conj-involution", inv, samples=n)
    ctx.check("conj-additive", add, samples=n)
    ctx.check("conj-antihomomorphism", anti, samples=n)

    # real-coefficient left factor: both orders evaluate to f(p) g(p)
    m_pts = ctx.cfg.count("points")
    collapse = 0.0
    for _ in range(10):
        f, g = ctx.series(2)
        f = QSeries(f.coeffs * np.array([1.0, 0.0, 0.0, 0.0]))
        F2, G2 = f.with_order(2 * N), g.with_order(2 * N)
        p = random_points(ctx.rng, m_pts)
        pointwise = qmul(evaluate(f, p), evaluate(g, p))
        collapse = max(collapse, rel_err(evaluate(star_mul(F2, G2), p), pointwise),
                       rel_err(evaluate(star_mul(G2, F2), p), pointwise))
    ctx.check("real-factor-collapse", collapse, kind="relative", points=m_pts)


# ------------------------------------------------------------------ product equivalence

def product_equivalence(ctx: Context) -> None:
    N = ctx.order
    n_pairs, m_pts = ctx.cfg.count("product-equivalence"), ctx.cfg.count("points")
    worst = 0.0
    for _ in range(n_pairs):
        f, g = ctx.series(2)
        full = star_mul(f.with_order(2 * N), g.with_order(2 * N))
        p = random_points(ctx.rng, m_pts)
        worst = max(worst, rel_err(closed_formula_eval(f, g, p), evaluate(full, p)))
    ctx.check("closed-formula-vs-convolution", worst, kind="relative",
              pairs=n_pairs, points=m_pts, order=N)

    q = ctx.pts.quaternion()
    for backend in ctx.backends():
        n = 3 if backend == "analytic" else ctx.cfg.count("fd-series")
        conv = closed = 0.0
        for _ in range(n):
            f, g = ctx.series(2)
            F, G = ctx.fields((f, g), backend)
            forms = calc.star_pointwise(F, G, ctx.pts)
            ref = evaluate(star_mul(f.with_order(2 * N), g.with_order(2 * N)), q)
            conv = max(conv, rel_err(forms, ref))
            closed = max(closed, rel_err(forms, closed_formula_eval(f, g, q)))
        ctx.check("forms-vs-convolution", conv, backend, "relative", tag=True, pairs=n)
        ctx.check("forms-vs-closed-formula", closed, backend, "relative", tag=True, pairs=n)

        a, b = ctx.quats(2)
        ca, cb = (SliceFunction.from_series(QSeries.constant(c, N), backend, ctx.cfg.fd_step)
                  for c in (a, b))
        ctx.check("forms-constants", rel_err(calc.star_pointwise(ca, cb, ctx.pts),
                                            np.broadcast_to(qmul(a, b), q.shape)),
                  backend, "relative", tag=True)

        f, g = ctx.series(2)
        f = QSeries(f.coeffs * np.array([1.0, 0.0, 0.0, 0.0]))
        F, G = ctx.fields((f, g), backend)
        fg = qmul(F(ctx.pts), G(ctx.pts))
        collapse = max(rel_err(calc.star_pointwise(F, G, ctx.pts), fg),
                       rel_err(calc.star_pointwise(G, F, ctx.pts), fg))
        ctx.check("forms-real-factor-collapse", collapse, backend, "relative", tag=True)

    # Regular functions that are not truncated series: agreement is reported, not judged.
    a, b = ctx.quats(2)
    pairs = {
        "exp*mobius": (exp_field(a), mobius_field(-2.5, b)),
        "mobius*exp": (mobius_field(2.0, b), exp_field(a)),
        "exp*exp": (exp_field(a), exp_field(b)),
    }
    for label, (F, G) in pairs.items():
        forms = calc.star_pointwise(F, G, ctx.pts)
        fq = F(ctx.pts)
        moved = qmul(qmul(qconj(fq) / np.sum(fq * fq, -1)[..., None], q), fq)
        closed = qmul(fq, value_at(G, moved))
        ctx.observe("closed-formula-vs-forms-nonseries", rel_err(forms, closed), pair=label)


# ------------------------------------------------------------------ reciprocal

def reciprocal_suite(ctx: Context) -> None:
    N, n = ctx.order, ctx.cfg.count("reciprocal")
    one = QSeries.one(N)
    right = left = imag = comm = 0.0
    for _ in range(n):
        (f,) = ctx.series(1, min_a0=0.3)
        fr = reciprocal(f)
        right = max(right, coeff_err(star_mul(f, fr), one))
        left = max(left, coeff_err(star_mul(fr, f), one))
        fc = regular_conjugate(f)
        s1, s2 = star_mul(f, fc), star_mul(fc, f)
        imag = max(imag, float(np.max(np.abs(s1.coeffs[:, 1:]))))
        comm = max(comm, coeff_err(s1, s2))
    ctx.check("reciprocal-right", right, samples=n, order=N)
    ctx.check("reciprocal-left", left, samples=n, order=N)
    ctx.check("symmetrization-real", max(imag, comm), samples=n,
              imaginary=imag, commutator=comm)

    u, v = ctx.quats(200).reshape(2, 100, 4)
    e1, e2, e3 = calc.inner_product_identity(u, v)
    ctx.check("inner-product-identity",
              float(max(np.max(qnorm(e1 - e3)), np.max(qnorm(e2 - e3)))), samples=100)

    q = ctx.pts.quaternion()
    for backend in ctx.backends():
        count = 3 if backend == "analytic" else ctx.cfg.count("fd-series")
        symm = recip = 0.0
        for _ in range(count):
            (f,) = ctx.series(1, min_a0=0.3)
            (F,) = ctx.fields((f,), backend)
            s_full = symmetrization(f.with_order(2 * N)).to_qseries()
            symm = max(symm, rel_err(calc.symm_pointwise(F, ctx.pts), evaluate(s_full, q)))
            # independent route: f^{-*}(q) = f(T(q))^{-1} with T(q) = f^c(q)^{-1} q f^c(q)
            fcq = evaluate(regular_conjugate(f), q)
            moved = qmul(qmul(qconj(fcq) / np.sum(fcq * fcq, -1)[..., None], q), fcq)
            fm = evaluate(f, moved)
            target = qconj(fm) / np.sum(fm * fm, -1)[..., None]
            recip = max(recip, rel_err(calc.recip_pointwise(F, ctx.pts), target))
        ctx.check("symm-pointwise-vs-series", symm, backend, "relative", tag=True, series=count)
        ctx.check("recip-pointwise-vs-inverse", recip, backend, "relative", tag=True,
                  series=count)
        (P,) = ctx.fields((QSeries.monomial(1, 1.0, N),), backend)
        qinv = qconj(q) / np.sum(q * q, -1)[..., None]
        ctx.check("recip-of-p", rel_err(calc.recip_pointwise(P, ctx.pts), qinv),
                  backend, "relative", tag=True)


# ------------------------------------------------------------------ characterization

def _smooth_fields(rng: np.random.Generator, h: float) -> list:
    """Smooth, generally non-regular, fields for the universal identities."""
    c = random_ball(rng, 5)

    def f0(t, r, a, b):
        return qmul(real_times(np.sin(t) * np.cos(r), iota_vec(a, b)), J) + real_times(np.cos(b), c[0])

    def f1(t, r, a, b):
        return real_times(np.exp(t * r) * np.cos(a) * np.sin(2 * b), c[1]) + real_times(r, BASIS[0])

    def f2(t, r, a, b):
        x = np.stack([np.cos(2 * a) * np.sin(b), t * r, np.sin(a) + np.cos(b), t * t], -1)
        return qmul(x, c[2])

    def f3(t, r, a, b):
        io = iota_vec(a, b)
        return qmul(qmul(io, c[3]), io) + real_times(np.exp(-r * r) * np.sin(a + b), BASIS[0])

    def f4(t, r, a, b):
        return real_times(1.0 / (1.0 + t * t + r * r), qmul(iota_vec(2 * a, b), c[4]))

    return [SliceFunction.from_evaluator(fn, "fd", h=h) for fn in (f0, f1, f2, f3, f4)]


def characterization(ctx: Context) -> None:
    N = ctx.order
    for backend in ctx.backends():
        count = ctx.cfg.count("characterization") if backend == "analytic" \
            else ctx.cfg.count("fd-series")
        worst = {"cullen-residual": 0.0, "cr-residual-proper": 0.0,
                 "compatibility-residual": 0.0, "proper-form-series": 0.0,
                 "fundamental-property": 0.0}
        kind = "absolute"
        for _ in range(count):
            (f,) = ctx.series(1)
            (F,) = ctx.fields((f,), backend)
            form = calc.proper_form(F)
            for name, fn in (
                ("cullen-residual", lambda p: calc.cullen_operator(F, p)),
                ("cr-residual-proper", lambda p: calc.cr_residual(form, p)),
                ("compatibility-residual", lambda p: calc.compatibility_residual(form, p)),
                ("fundamental-property", lambda p: calc.fundamental_residual(F, p)),
            ):
                res, kind = ctx.pde(fn, backend, F)
                worst[name] = max(worst[name], res)
            # slice_components oracle: u = sum u_n a_n, v = sum v_n a_n
            u_ref = v_ref = 0.0
            for nn in range(N + 1):
                un, vn = slice_components(nn, ctx.pts.t, ctx.pts.r)
                u_ref = u_ref + real_times(un, f.coeffs[nn])
                v_ref = v_ref + real_times(vn, f.coeffs[nn])
            worst["proper-form-series"] = max(worst["proper-form-series"],
                                              rel_err(form.u(ctx.pts), u_ref),
                                              rel_err(form.v(ctx.pts), v_ref))
        for name, res in worst.items():
            k = "relative" if name == "proper-form-series" else kind
            ctx.check(name, res, backend, k, tag=True, series=count, order=N)

        if backend == "fd":
            fields = _smooth_fields(ctx.rng, ctx.cfg.fd_step)[: ctx.cfg.count("smooth-fields")]
            res = max(ctx.grid_max(lambda p, F=F: calc.fundamental_residual(F, p))
                      for F in fields)
            ctx.check("fundamental-property", res, "fd", "absolute", tag=False,
                      fields=len(fields), note="non-series smooth fields")

    # f = 1 written as 0 + iota(-iota): not proper, compatibility fails by exactly 2
    zero = SliceFunction.constant(0.0)
    witness = calc.ComplexLikeForm(zero, -1.0 * IOTA, proper=False)
    norms = calc.residual_norms(calc.compatibility_residual(witness, ctx.pts))
    ctx.check("nonproper-witness", float(np.max(np.abs(norms - 2.0))),
              expected_norm=2.0, min_norm=float(norms.min()), max_norm=float(norms.max()))


# ------------------------------------------------------------------ hyperholomorphic

def hyperholomorphic(ctx: Context) -> None:
    for backend in ctx.backends():
        count = ctx.cfg.count("hyperholomorphic") if backend == "analytic" \
            else min(ctx.cfg.count("hyperholomorphic"), ctx.cfg.count("fd-series"))
        worst = {k: 0.0 for k in ("modified-cr-product", "product-rule-identity",
                                  "product-properness", "conjugate-modified-cr",
                                  "conjugate-compatibility", "hyperholomorphic-certificate")}
        assoc = 0.0
        kind = "absolute"
        for _ in range(count):
            f, g, h = ctx.series(3)
            F, G, H = ctx.fields((f, g, h), backend)
            pf, pg = calc.proper_form(F), calc.proper_form(G)
            prod = calc.star_form(pf, pg)
            FG = prod.field()
            conj = calc.conj_form(pf)
            checks = {
                "modified-cr-product": (lambda p: calc.modified_cr_residual(prod, p), (FG,)),
                "product-rule-identity": (lambda p: calc.product_rule_residual(F, G, p), (FG,)),
                "product-properness": (lambda p: calc.properness_residual(F, G, p), (FG,)),
                "conjugate-modified-cr": (lambda p: calc.modified_cr_residual(conj, p), (F,)),
                "conjugate-compatibility": (lambda p: calc.compatibility_residual(conj, p), (F,)),
                "hyperholomorphic-certificate":
                    (lambda p: calc.modified_cr_residual(pf, p), (F,)),
            }
            for name, (fn, refs) in checks.items():
                res, kind = ctx.pde(fn, backend, *refs)
                worst[name] = max(worst[name], res)
            left = calc.star_field(calc.star_field(F, G), H)(ctx.pts)
            right = calc.star_field(F, calc.star_field(G, H))(ctx.pts)
            assoc = max(assoc, rel_err(left, right))
        for name, res in worst.items():
            ctx.check(name, res, backend, kind, tag=True, triples=count)
        ctx.check("pointwise-associativity", assoc, backend, "relative", tag=True, triples=count)


# ------------------------------------------------------------------ fueter

def _angular_test_fields(backend: str, h: float) -> list:
    if backend == "analytic":
        ix, iy, iz = (ComponentField(IOTA, k) for k in (1, 2, 3))
        return [ix, iy * iz, ix * ix * iy + iz, CoordField("beta") * ix]
    return [
        calc.real_field(lambda t, r, a, b: np.exp(np.cos(b)) * np.cos(2 * a), "fd", h),
        calc.real_field(lambda t, r, a, b: np.sin(b) ** 3 * np.sin(3 * a) + np.cos(b), "fd", h),
        calc.real_field(lambda t, r, a, b: np.cos(a) * np.sin(b) * np.cos(b) ** 2, "fd", h),
    ]


def fueter(ctx: Context) -> None:
    N = ctx.order
    pts = ctx.pts
    for backend in ctx.backends():
        h = ctx.cfg.fd_step
        P1 = SliceFunction.from_series(QSeries.monomial(1, 1.0, N), backend, h)
        P2 = SliceFunction.from_series(QSeries.monomial(2, 1.0, N), backend, h)
        ctx.check("dl-of-p", ctx.grid_max(lambda p: calc.fueter_dl(P1, p) + 2.0 * BASIS[0]),
                  backend, tag=True)
        ctx.check("dl-of-p2", ctx.grid_max(
            lambda p: calc.fueter_dl(P2, p) + real_times(4.0 * p.t, BASIS[0])), backend, tag=True)

        count = ctx.cfg.count("fueter") if backend == "analytic" else ctx.cfg.count("fd-series")
        slice_id = dl_lap = cross = 0.0
        kind = "absolute"
        for k in range(count):
            # degrees cycle through 1..N so low and high degrees are both exercised
            deg = 1 + k % N if count < N else 1 + (k * N) // count
            (f,) = ctx.series(1, order=max(deg, 1))
            (F,) = ctx.fields((f,), backend)
            res, kind = ctx.pde(lambda p: calc.fueter_slice_residual(F, p), backend, F)
            slice_id = max(slice_id, res)
            res, _ = ctx.pde(lambda p: calc.fueter_dl_laplacian(F, p), backend, F)
            dl_lap = max(dl_lap, res)
            cross = max(cross, rel_err(calc.laplacian4(F, pts), calc.laplacian_cartesian(F, pts)))
        ctx.check("fueter-slice-identity", slice_id, backend, kind, tag=True, series=count)
        ctx.check("fueter-laplacian", dl_lap, backend, kind, tag=True, series=count)
        ctx.check("laplacian-cross-check", cross, backend, "relative", tag=True, series=count)

        T, R = CoordField("t"), CoordField("r")
        norm2 = T * T + R * R
        if backend == "fd":
            norm2 = calc.real_field(lambda t, r, a, b: t * t + r * r, "fd", h)
        examples = max(ctx.grid_max(lambda p: calc.laplacian4(P2, p) + 4.0 * BASIS[0]),
                       ctx.grid_max(lambda p: calc.laplacian4(norm2, p) - 8.0 * BASIS[0]))
        ctx.check("laplacian-examples", examples, backend, tag=True)

        ang, kind = 0.0, "absolute"
        for phi in _angular_test_fields(backend, h):
            res, kind = ctx.pde(lambda p: calc.angular_laplacian(phi, p)
                                - calc.angular_factorized(phi, p), backend, phi)
            ang = max(ang, res)
        ctx.check("angular-factorization", ang, backend, kind, tag=True)


REGISTRY = {
    "ring-laws": ring_laws,
    "product-equivalence": product_equivalence,
    "reciprocal": reciprocal_suite,
    "characterization": characterization,
    "hyperholomorphic": hyperholomorphic,
    "fueter": fueter,
}
assert tuple(REGISTRY) == SUITES


def run_suite(cfg: SuiteConfig, name: str) -> SuiteResult:
    if name not in REGISTRY:
        raise UnknownSuite(f"unknown suite {name!r}")
    ctx = Context(cfg, name)
    start = time.perf_counter()
    REGISTRY[name](ctx)
    ctx.result.wall_time = time.perf_counter() - start
    log.info("suite %s: %d checks in %.2f s", name, len(ctx.result.checks), ctx.result.wall_time)
    return ctx.result


def run_suites(cfg: SuiteConfig) -> VerificationReport:
    """Run the configured suites; results are ordered by registration, not completion."""
    report = VerificationReport(seed=cfg.seed, config=cfg.echo())
    names = [s for s in SUITES if s in cfg.suites]
    if not names:
        msg = "no suites selected; the report contains zero checks"
        log.warning(msg)
        report.warnings.append(msg)
        return report
    if cfg.jobs > 1:
        with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
            results = dict(zip(names, pool.map(lambda s: run_suite(cfg, s), names)))
    else:
        results = {s: run_suite(cfg, s) for s in names}
    report.suites = [results[s] for s in names]
    return report


__all__ = ["REGISTRY", "run_suite", "run_suites", "random_points", "rel_err"]
