"""Slice calculus: the angular operator d/d(iota), proper forms, the pointwise
regular product and its companions, and the differential operators (Cullen,
left Fueter, 4D Laplacian) with residual checkers for each identity.

Operators taking a point ``x`` accept a :class:`~cullen.fields.Points` or a
tuple ``(t, r, alpha, beta)`` of scalars/arrays and return quaternion arrays of
shape ``x.shape + (4,)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import OutOfDomain, SymmetrizationZero
from .fields import (
    AXES,
    CSC_BETA,
    DEFAULT_H,
    FRAME_INV_ALPHA,
    FRAME_INV_BETA,
    IOTA,
    SIN_BETA,
    UNIT_I,
    ConjField,
    FDField,
    Points,
    ProductField,
    SliceFunction,
    SumField,
    as_field,
    d_iota_field,
    iota_times,
    unit_order,
)
from .quaternion import (
    BASIS,
    BETA_MIN,
    EPS_ZERO,
    as_qarray,
    qconj,
    qmul,
    qnorm,
    real_times,
    to_spherical,
)

T, R, A, B = (unit_order(k) for k in range(4))


# ------------------------------------------------------------------ domains

@dataclass(frozen=True)
class SliceDomain:
    """Box in ``(t, r, alpha, beta)`` away from the real axis and the poles."""

    t_range: tuple = (-1.0, 1.0)
    r_range: tuple = (0.2, 1.5)
    alpha_range: tuple = (0.0, 2 * math.pi)
    beta_range: tuple = (0.3, math.pi - 0.3)
    counts: tuple = (6, 6, 8, 6)
    r_min: float = 0.05
    beta_min: float = BETA_MIN

    def __post_init__(self):
        if self.r_range[0] < self.r_min:
            raise ValueError(f"r_range must start at or above {self.r_min}")
        lo, hi = self.beta_range
        if lo <= self.beta_min or hi >= math.pi - self.beta_min:
            raise ValueError("beta_range must stay inside the polar exclusion band")
        if self.alpha_range[0] < 0 or self.alpha_range[1] > 2 * math.pi:
            raise ValueError("alpha_range must lie in [0, 2 pi]")
        if len(self.counts) != 4 or min(self.counts) < 1:
            raise ValueError("counts must be four positive integers")

    def axis_values(self):
        nt, nr, na, nb = self.counts
        return (
            np.linspace(*self.t_range, nt),
            np.linspace(*self.r_range, nr),
            # alpha is periodic: drop the duplicate endpoint
            np.linspace(*self.alpha_range, na, endpoint=False),
            np.linspace(*self.beta_range, nb),
        )

    def grid(self) -> Points:
        return Points(*np.meshgrid(*self.axis_values(), indexing="ij"))

    def contains(self, x) -> bool:
        pts = Points.of(x)
        ok = True
        for c, (lo, hi) in zip(pts.coords(), (self.t_range, self.r_range,
                                              self.alpha_range, self.beta_range)):
            ok &= bool(np.all((c >= lo - 1e-12) & (c <= hi + 1e-12)))
        return ok


DEFAULT_DOMAIN = SliceDomain()


def _points(x, fields=(), domain: SliceDomain | None = None, orders: int = 1) -> Points:
    pts = Points.of(x)
    hs = [f.h for f in fields if f is not None and f.h is not None]
    margin = orders * 2 * max(hs) if hs else 0.0
    pts.check(margin=margin)
    if domain is not None and not domain.contains(pts):
        raise OutOfDomain("point outside the slice domain")
    return pts


# ------------------------------------------------------------------ forms

@dataclass(frozen=True)
class ComplexLikeForm:
    """A pair ``(u, v)`` with ``f = u + iota v``; ``proper`` marks the canonical one."""

    u: SliceFunction
    v: SliceFunction
    proper: bool = False

    def field(self) -> SliceFunction:
        return self.u + iota_times(self.v)


def d_iota(f: SliceFunction, x) -> np.ndarray:
    pts = _points(x, (f,))
    return (qmul(FRAME_INV_ALPHA(pts), f.partial(pts, A))
            + qmul(FRAME_INV_BETA(pts), f.partial(pts, B)))


def proper_form(f: SliceFunction) -> ComplexLikeForm:
    """``u = 1/2 d/d(iota)(iota f)``, ``v = 1/2 d/d(iota)(f)``."""
    u = 0.5 * d_iota_field(iota_times(f))
    v = 0.5 * d_iota_field(f)
    return ComplexLikeForm(u, v, proper=True)


def cullen_operator(f: SliceFunction, x) -> np.ndarray:
    pts = _points(x, (f,))
    return f.partial(pts, T) + qmul(IOTA(pts), f.partial(pts, R))


def cr_residual(form: ComplexLikeForm, x):
    """``(du/dt - dv/dr, du/dr + dv/dt)``."""
    pts = _points(x, (form.u, form.v))
    u, v = form.u, form.v
    return (u.partial(pts, T) - v.partial(pts, R),
            u.partial(pts, R) + v.partial(pts, T))


def modified_cr_residual(form: ComplexLikeForm, x):
    """``(v_alpha / sin(beta) + u_beta, u_alpha / sin(beta) - v_beta)``."""
    pts = _points(x, (form.u, form.v))
    u, v = form.u, form.v
    inv_s = 1.0 / np.sin(pts.beta)
    return (real_times(inv_s, v.partial(pts, A)) + u.partial(pts, B),
            real_times(inv_s, u.partial(pts, A)) - v.partial(pts, B))


def compatibility_residual(form: ComplexLikeForm, x) -> np.ndarray:
    """``d/d(iota) u - iota d/d(iota) v``; zero for proper forms of regular functions."""
    pts = _points(x, (form.u, form.v), orders=2)
    return d_iota(form.u, pts) - qmul(IOTA(pts), d_iota(form.v, pts))


# ------------------------------------------------------------------ products

def star_form(f1: ComplexLikeForm, f2: ComplexLikeForm) -> ComplexLikeForm:
    """``(u1 u2 - v1 v2, u1 v2 + v1 u2)``; properness of the result is not assumed."""
    u = f1.u * f2.u - f1.v * f2.v
    v = f1.u * f2.v + f1.v * f2.u
    return ComplexLikeForm(u, v, proper=False)


def _require_proper(*forms: ComplexLikeForm) -> None:
    if not all(fm.proper for fm in forms):
        raise ValueError("the regular product is defined on proper forms only")


def star_field(f: SliceFunction, g: SliceFunction) -> SliceFunction:
    """Regular product of two fields, built from their proper forms."""
    pf, pg = proper_form(f), proper_form(g)
    _require_proper(pf, pg)
    return star_form(pf, pg).field()


def star_pointwise(f: SliceFunction, g: SliceFunction, x) -> np.ndarray:
    pts = _points(x, (f, g))
    return star_field(f, g)(pts)


def conj_form(form: ComplexLikeForm) -> ComplexLikeForm:
    return ComplexLikeForm(ConjField(form.u), ConjField(form.v), proper=form.proper)


def conj_field(f: SliceFunction) -> SliceFunction:
    return conj_form(proper_form(f)).field()


def conj_pointwise(f: SliceFunction, x) -> np.ndarray:
    pts = _points(x, (f,))
    form = proper_form(f)
    return qconj(form.u(pts)) + qmul(IOTA(pts), qconj(form.v(pts)))


def symm_pair(f: SliceFunction, x):
    """Real pair ``(|u|^2 - |v|^2, 2 u.v)`` of the symmetrization at ``x``."""
    pts = _points(x, (f,))
    form = proper_form(f)
    u, v = form.u(pts), form.v(pts)
    return np.sum(u * u, -1) - np.sum(v * v, -1), 2.0 * np.sum(u * v, -1)


def symm_pointwise(f: SliceFunction, x) -> np.ndarray:
    pts = _points(x, (f,))
    su, sv = symm_pair(f, pts)
    return real_times(su, BASIS[0]) + real_times(sv, IOTA(pts))


def inner_product_identity(u, v):
    """The three expressions ``u conj(v) + v conj(u)``, ``conj(u) v + conj(v) u``, ``2 u.v``."""
    u, v = as_qarray(u), as_qarray(v)
    return (qmul(u, qconj(v)) + qmul(v, qconj(u)),
            qmul(qconj(u), v) + qmul(qconj(v), u),
            real_times(2.0 * np.sum(u * v, -1), BASIS[0]))


def recip_pointwise(f: SliceFunction, x, eps_zero: float = EPS_ZERO) -> np.ndarray:
    """Regular reciprocal ``(1/f^s) f^c`` at ``x``."""
    pts = _points(x, (f,))
    su, sv = symm_pair(f, pts)
    n2 = su * su + sv * sv
    if np.any(np.sqrt(n2) < eps_zero):
        raise SymmetrizationZero(f"symmetrization vanishes (below {eps_zero:g})")
    hat_u, hat_v = su / n2, -sv / n2
    iota = IOTA(pts)
    inv_s = real_times(hat_u, BASIS[0]) + real_times(hat_v, iota)
    return qmul(inv_s, conj_pointwise(f, pts))


# ------------------------------------------------------------------ residuals

def fundamental_residual(f: SliceFunction, x) -> np.ndarray:
    """``d/d(iota)(iota f) + iota d/d(iota) f - 2 f``."""
    pts = _points(x, (f,))
    return d_iota(iota_times(f), pts) + qmul(IOTA(pts), d_iota(f, pts)) - 2.0 * f(pts)


def product_rule_residual(f: SliceFunction, g: SliceFunction, x) -> np.ndarray:
    """``d/d(iota)(f*g) - 1/2 (d(iota f) d(g) + d(f) d(iota g))``."""
    pts = _points(x, (f, g), orders=2)
    lhs = d_iota(star_field(f, g), pts)
    rhs = 0.5 * (qmul(d_iota(iota_times(f), pts), d_iota(g, pts))
                 + qmul(d_iota(f, pts), d_iota(iota_times(g), pts)))
    return lhs - rhs


def properness_residual(f: SliceFunction, g: SliceFunction, x):
    """Proper form of ``f*g`` recomputed versus the product form."""
    pts = _points(x, (f, g), orders=2)
    product = star_form(proper_form(f), proper_form(g))
    again = proper_form(product.field())
    return again.u(pts) - product.u(pts), again.v(pts) - product.v(pts)


def associativity_residual(f, g, h, x) -> np.ndarray:
    pts = _points(x, (f, g, h), orders=3)
    left = star_field(star_field(f, g), h)
    right = star_field(f, star_field(g, h))
    return left(pts) - right(pts)


def fueter_slice_residual(f: SliceFunction, x) -> np.ndarray:
    """``D_l f + 2 v / r`` with ``v`` from the proper form."""
    pts = _points(x, (f,))
    v = proper_form(f).v(pts)
    return fueter_dl(f, pts) + real_times(2.0 / pts.r, v)


# ------------------------------------------------------------------ Cartesian

def _power_word_partials(f, q: np.ndarray, dirs: tuple) -> np.ndarray:
    """Exact Cartesian partial ``d_{dirs}`` of ``sum q^n a_n`` at quaternions ``q``.

    Horner form ``P_n = a_n + q P_{n+1}``; since ``d_d q = e_d`` and second
    derivatives of ``q`` vanish, ``d_S P_n = q d_S P_{n+1} + sum_{s in S} e_s d_{S-s} P_{n+1}``.
    Subsets of positions in ``dirs`` are tracked as bitmasks.
    """
    m = len(dirs)
    full = (1 << m) - 1
    coeffs = f.coeffs
    zero = np.zeros(q.shape)
    acc = {mask: zero for mask in range(full + 1)}
    acc[0] = np.broadcast_to(coeffs[-1], q.shape).copy()
    for n in range(f.order - 1, -1, -1):
        new = {}
        for mask in range(full + 1):
            val = qmul(q, acc[mask])
            for pos in range(m):
                if mask & (1 << pos):
                    val = val + qmul(BASIS[dirs[pos]], acc[mask & ~(1 << pos)])
            if mask == 0:
                val = val + coeffs[n]
            new[mask] = val
        acc = new
    return acc[full]


def _cartesian_eval(f: SliceFunction):
    def g(q):
        t, r, alpha, beta = to_spherical(q)
        return f(Points(t, r, alpha, beta))
    return g


def _fd_cartesian_partial(g, q, dirs: tuple, h: float) -> np.ndarray:
    """Central differences in Cartesian directions (each at most twice)."""
    if not dirs:
        return g(q)
    d, rest = dirs[0], dirs[1:]
    if rest and rest[0] == d:
        rest = rest[1:]
        return (_fd_cartesian_partial(g, q + h * BASIS[d], rest, h)
                - 2.0 * _fd_cartesian_partial(g, q, rest, h)
                + _fd_cartesian_partial(g, q - h * BASIS[d], rest, h)) / (h * h)
    return (_fd_cartesian_partial(g, q + h * BASIS[d], rest, h)
            - _fd_cartesian_partial(g, q - h * BASIS[d], rest, h)) / (2.0 * h)


def cartesian_partial(f: SliceFunction, x, dirs: tuple, h: float | None = None) -> np.ndarray:
    """Partial derivative of ``f`` in Cartesian directions ``dirs`` (0=t, 1=x, 2=y, 3=z).

    Series-backed fields on the analytic backend are differentiated exactly as
    quaternion polynomials; everything else by central differences through
    the chart with step ``h`` (default: the field's own step or 1e-3).
    """
    pts = _points(x, (f,))
    q = pts.quaternion()
    if f.backend == "analytic" and f.series is not None:
        return _power_word_partials(f.series, q, tuple(dirs))
    step = h if h is not None else (f.h or DEFAULT_H)
    if np.any(pts.r <= 3 * step * max(1, len(dirs))):
        raise OutOfDomain("point too close to the real axis for Cartesian differences")
    return _fd_cartesian_partial(_cartesian_eval(f), q, tuple(sorted(dirs)), step)


def _chain_dl(f: SliceFunction, pts: Points) -> np.ndarray:
    # d_x = iota d_r + grad(alpha) d_alpha + grad(beta) d_beta, written with
    # the frame inverses: sum_k e_k d_k = iota d_r - (1/r) d/d(iota)
    iota = IOTA(pts)
    out = f.partial(pts, T) + qmul(iota, f.partial(pts, R))
    return out - real_times(1.0 / pts.r, d_iota(f, pts))


def fueter_dl(f: SliceFunction, x) -> np.ndarray:
    """Left Fueter operator ``df/dt + i df/dx + j df/dy + k df/dz``."""
    pts = _points(x, (f,))
    if f.backend == "analytic" and f.series is None:
        return _chain_dl(f, pts)
    out = 0.0
    for d in range(4):
        out = out + qmul(BASIS[d], cartesian_partial(f, pts, (d,)))
    return out


def laplacian_cartesian(f: SliceFunction, x, h: float | None = None) -> np.ndarray:
    pts = _points(x, (f,))
    out = 0.0
    for d in range(4):
        out = out + cartesian_partial(f, pts, (d, d), h)
    return out


def laplacian4(f: SliceFunction, x) -> np.ndarray:
    """4D Laplacian in the spherical chart.

    ``f_tt + f_rr + (2/r) f_r + (1/r^2)(f_aa / sin^2 b + f_bb + cot b f_b)``
    """
    pts = _points(x, (f,), orders=2)
    r, beta = pts.r, pts.beta
    s = np.sin(beta)
    angular = (real_times(1.0 / (s * s), f.partial(pts, (0, 0, 2, 0)))
               + f.partial(pts, (0, 0, 0, 2))
               + real_times(np.cos(beta) / s, f.partial(pts, B)))
    return (f.partial(pts, (2, 0, 0, 0)) + f.partial(pts, (0, 2, 0, 0))
            + real_times(2.0 / r, f.partial(pts, R)) + real_times(1.0 / (r * r), angular))


def fueter_dl_laplacian(f: SliceFunction, x, h: float | None = None) -> np.ndarray:
    """``D_l Delta f`` from Cartesian third partials."""
    pts = _points(x, (f,))
    if f.backend == "analytic" and f.series is not None:
        q = pts.quaternion()
        out = 0.0
        for a in range(4):
            for c in range(4):
                out = out + qmul(BASIS[a], _power_word_partials(f.series, q, (a, c, c)))
        return out
    step = h if h is not None else (f.h or DEFAULT_H)
    g = _cartesian_eval(f)
    q = pts.quaternion()

    def lap(qq):
        return sum(_fd_cartesian_partial(g, qq, (d, d), step) for d in range(4))

    out = 0.0
    for a in range(4):
        da = (lap(q + step * BASIS[a]) - lap(q - step * BASIS[a])) / (2.0 * step)
        out = out + qmul(BASIS[a], da)
    return out


# ------------------------------------------------------------------ angular parts

def angular_laplacian(phi: SliceFunction, x) -> np.ndarray:
    """``phi_aa / sin^2 b + phi_bb + cot b phi_b``."""
    pts = _points(x, (phi,), orders=2)
    s = np.sin(pts.beta)
    return (real_times(1.0 / (s * s), phi.partial(pts, (0, 0, 2, 0)))
            + phi.partial(pts, (0, 0, 0, 2))
            + real_times(np.cos(pts.beta) / s, phi.partial(pts, B)))


def angular_factorized(phi: SliceFunction, x) -> np.ndarray:
    """``(1/sin^2 b)(d_a - i sin b d_b)(d_a + i sin b d_b) phi``.

    The complex unit is the quaternion ``i``, which acts on real-valued
    ``phi`` exactly like the imaginary unit of C.
    """
    pts = _points(x, (phi,), orders=2)
    inner = phi.d("alpha") + UNIT_I * (SIN_BETA * phi.d("beta"))
    if phi.backend == "fd":
        # sample the first factor and difference it again, rather than
        # letting Leibniz fold both factors into one stencil
        first = inner
        inner = FDField(lambda *c: first(Points(*c)), h=phi.h, provenance="derived")
    outer = inner.d("alpha") - UNIT_I * (SIN_BETA * inner.d("beta"))
    return (CSC_BETA * CSC_BETA * outer)(pts)


# ------------------------------------------------------------------ sweeps

@dataclass(frozen=True)
class ResidualStats:
    max_norm: float
    mean_norm: float
    argmax_point: tuple = field(default=())

    def as_dict(self) -> dict:
        return {"max_norm": self.max_norm, "mean_norm": self.mean_norm,
                "argmax_point": list(self.argmax_point)}


def residual_norms(values) -> np.ndarray:
    """Pointwise norm of a residual or the max over a tuple of residuals."""
    if isinstance(values, tuple):
        return np.max(np.stack([qnorm(v) for v in values]), axis=0)
    return qnorm(values)


def sweep(fn: Callable[[Points], object], domain: SliceDomain = DEFAULT_DOMAIN,
          pts: Points | None = None) -> ResidualStats:
    """Max and mean residual norm of ``fn`` over a grid, with the worst point."""
    pts = pts if pts is not None else domain.grid()
    norms = np.broadcast_to(residual_norms(fn(pts)), pts.shape)
    idx = np.unravel_index(int(np.argmax(norms)), pts.shape)
    return ResidualStats(float(norms[idx]), float(np.mean(norms)), pts.at(idx))


def is_hyperholomorphic(f: SliceFunction, domain: SliceDomain = DEFAULT_DOMAIN,
                        tol: float | None = None) -> bool:
    """Certify numerically: modified CR residual of the proper form below ``tol``.

    The default ``tol`` is ten times the backend tolerance.
    """
    if tol is None:
        tol = 10 * backend_tolerance(f)
    form = proper_form(f)
    return sweep(lambda p: modified_cr_residual(form, p), domain).max_norm <= tol


def backend_tolerance(f: SliceFunction) -> float:
    return 1e-4 if f.backend == "fd" else 1e-9


# ------------------------------------------------------------------ helpers

def coordinate_field(axis: str) -> SliceFunction:
    from .fields import CoordField
    return CoordField(AXES[axis])


def real_field(evaluator, backend="fd", h=DEFAULT_H, partials=None) -> SliceFunction:
    """Scalar field from ``evaluator(t, r, alpha, beta) -> real array``."""
    def qeval(t, r, alpha, beta):
        val = np.asarray(evaluator(t, r, alpha, beta), dtype=float)
        return real_times(val, BASIS[0])

    qpartials = None
    if partials is not None:
        def qpartials(t, r, alpha, beta, order):
            return real_times(np.asarray(partials(t, r, alpha, beta, order), float), BASIS[0])
    return SliceFunction.from_evaluator(qeval, backend=backend, h=h, partials=qpartials)


__all__ = [
    "SliceDomain", "DEFAULT_DOMAIN", "ComplexLikeForm", "d_iota", "proper_form",
    "cullen_operator", "cr_residual", "modified_cr_residual", "compatibility_residual",
    "star_form", "star_field", "star_pointwise", "conj_form", "conj_field",
    "conj_pointwise", "symm_pair", "symm_pointwise", "inner_product_identity",
    "recip_pointwise", "fundamental_residual", "product_rule_residual",
    "properness_residual", "associativity_residual", "fueter_slice_residual",
    "cartesian_partial", "fueter_dl", "laplacian_cartesian", "laplacian4",
    "fueter_dl_laplacian", "angular_laplacian", "angular_factorized", "ResidualStats",
    "sweep", "is_hyperholomorphic", "backend_tolerance", "coordinate_field",
    "real_field", "as_field", "SumField", "ProductField",
]
