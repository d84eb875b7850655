"""Quaternion-valued fields on the spherical chart ``(t, r, alpha, beta)``.

A field knows its value and its partial derivatives with respect to the four
chart coordinates.  Leaves supply partials either in closed form (the
``analytic`` backend) or by central finite differences of an evaluator (the
``fd`` backend).  Combinators (sums, ordered quaternion products, conjugation,
partials) apply the exact differentiation rules to whatever their children
return, so composite fields inherit the accuracy of their leaves.

Points are the :class:`Points` container; partial derivative orders are
4-tuples ``(n_t, n_r, n_alpha, n_beta)``.
"""
from __future__ import annotations

import math
from itertools import product as iproduct
from math import comb

import numpy as np
from numpy.polynomial import polynomial as P

from .errors import OutOfDomain, PolarSingularity
from .quaternion import (
    BETA_MIN,
    I,
    as_qarray,
    from_imag,
    iota_vec,
    qconj,
    qmul,
    to_cartesian,
)
from .series import QSeries, evaluate

AXES = {"t": 0, "r": 1, "alpha": 2, "beta": 3}
ZERO_ORDER = (0, 0, 0, 0)
DEFAULT_H = 1e-3

# Central-difference stencils (offsets, weights), second order accurate.
_STENCILS = {
    1: ((-1, 1), (-0.5, 0.5)),
    2: ((-1, 0, 1), (1.0, -2.0, 1.0)),
    3: ((-2, -1, 1, 2), (-0.5, 1.0, -1.0, 0.5)),
    4: ((-2, -1, 0, 1, 2), (1.0, -4.0, 6.0, -4.0, 1.0)),
}


def unit_order(axis) -> tuple:
    k = AXES[axis] if isinstance(axis, str) else axis
    return tuple(1 if i == k else 0 for i in range(4))


def add_orders(a, b) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


class Points:
    """A broadcast set of chart points with a per-evaluation derivative cache."""

    def __init__(self, t, r, alpha, beta):
        arrs = np.broadcast_arrays(*(np.asarray(v, dtype=float) for v in (t, r, alpha, beta)))
        self.t, self.r, self.alpha, self.beta = (np.array(a) for a in arrs)
        self._cache: dict = {}

    @classmethod
    def of(cls, x) -> "Points":
        if isinstance(x, Points):
            return x
        t, r, alpha, beta = x
        return cls(t, r, alpha, beta)

    @property
    def shape(self) -> tuple:
        return self.t.shape

    @property
    def size(self) -> int:
        return self.t.size

    def coords(self) -> tuple:
        return self.t, self.r, self.alpha, self.beta

    def shifted(self, deltas) -> "Points":
        return Points(*(c + d for c, d in zip(self.coords(), deltas)))

    def quaternion(self) -> np.ndarray:
        return to_cartesian(self.t, self.r, self.alpha, self.beta)

    def iota(self) -> np.ndarray:
        return iota_vec(self.alpha, self.beta)

    def at(self, index) -> tuple:
        """Coordinates of a single point as plain floats."""
        return tuple(float(c[index]) for c in self.coords())

    def check(self, margin: float = 0.0, beta_min: float = BETA_MIN) -> None:
        if np.any(self.r <= margin):
            raise OutOfDomain(f"r must exceed {margin:g} (real axis excluded)")
        if np.any(self.beta - margin <= beta_min) or np.any(self.beta + margin >= math.pi - beta_min):
            raise PolarSingularity(f"beta must lie in ({beta_min:g}, pi - {beta_min:g})")


# ------------------------------------------------------------------ base class

class SliceFunction:
    """Base class: a quaternion-valued field with partial derivatives."""

    backend = "analytic"
    provenance = "derived"
    #: truncated series behind a series-backed field, else None
    series: QSeries | None = None
    #: finite-difference step of the leaves (None for purely analytic fields)
    h: float | None = None

    def __call__(self, x) -> np.ndarray:
        return self.partial(x, ZERO_ORDER)

    def partial(self, x, order=ZERO_ORDER) -> np.ndarray:
        pts = Points.of(x)
        order = tuple(int(o) for o in order)
        key = (self, order)
        cached = pts._cache.get(key)
        if cached is None:
            cached = np.broadcast_to(self._partial(pts, order), pts.shape + (4,))
            pts._cache[key] = cached
        return cached

    def _partial(self, pts: Points, order: tuple) -> np.ndarray:
        raise NotImplementedError

    def d(self, axis) -> "SliceFunction":
        return PartialField(self, AXES[axis] if isinstance(axis, str) else axis)

    def conj(self) -> "SliceFunction":
        return ConjField(self)

    def __add__(self, other):
        return SumField([(1.0, self), (1.0, as_field(other))])

    def __radd__(self, other):
        return SumField([(1.0, as_field(other)), (1.0, self)])

    def __sub__(self, other):
        return SumField([(1.0, self), (-1.0, as_field(other))])

    def __rsub__(self, other):
        return SumField([(1.0, as_field(other)), (-1.0, self)])

    def __neg__(self):
        return SumField([(-1.0, self)])

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return SumField([(float(other), self)])
        return ProductField(self, as_field(other))

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return SumField([(float(other), self)])
        return ProductField(as_field(other), self)

    # ---- constructors -----------------------------------------------------

    @staticmethod
    def from_series(f: QSeries, backend: str = "analytic", h: float = DEFAULT_H) -> "SliceFunction":
        """Field ``p -> sum p^n a_n`` with the chosen derivative backend."""
        if backend == "analytic":
            return SeriesField(f)
        if backend == "fd":
            def evaluator(t, r, alpha, beta):
                return evaluate(f, to_cartesian(t, r, alpha, beta))
            fn = FDField(evaluator, h=h, provenance="series")
            fn.series = f
            return fn
        raise ValueError(f"unknown backend {backend!r}")

    @staticmethod
    def from_evaluator(evaluator, backend: str = "fd", h: float = DEFAULT_H,
                       partials=None) -> "SliceFunction":
        """Wrap ``evaluator(t, r, alpha, beta) -> (..., 4)``.

        With ``backend='analytic'`` a ``partials(t, r, alpha, beta, order)``
        callback giving closed-form derivatives is required.
        """
        if backend == "fd":
            return FDField(evaluator, h=h)
        if backend == "analytic":
            if partials is None:
                raise ValueError("analytic backend needs a partials callback")
            return CallbackField(evaluator, partials)
        raise ValueError(f"unknown backend {backend!r}")

    @staticmethod
    def constant(a) -> "SliceFunction":
        return ConstField(a)


def as_field(value) -> SliceFunction:
    if isinstance(value, SliceFunction):
        return value
    return ConstField(value)


def _leaf_backend(*children: SliceFunction):
    backends = {c.backend for c in children}
    hs = [c.h for c in children if c.h is not None]
    return ("fd" if "fd" in backends else "analytic"), (max(hs) if hs else None)


# ------------------------------------------------------------------ leaves

class ConstField(SliceFunction):
    def __init__(self, a):
        if isinstance(a, (int, float)):
            a = [float(a), 0.0, 0.0, 0.0]
        self.a = as_qarray(a).reshape(4)

    def _partial(self, pts, order):
        if order == ZERO_ORDER:
            return self.a
        return np.zeros(4)


class CoordField(SliceFunction):
    """One chart coordinate as a real scalar field."""

    def __init__(self, axis):
        self.axis = AXES[axis] if isinstance(axis, str) else axis

    def _partial(self, pts, order):
        out = np.zeros(pts.shape + (4,))
        if order == ZERO_ORDER:
            out[..., 0] = pts.coords()[self.axis]
        elif order == unit_order(self.axis):
            out[..., 0] = 1.0
        return out


def _trig_deriv(fn, x, n):
    # n-th derivative of sin or cos via the quarter-period shift
    return fn(x + n * math.pi / 2)


def csc_derivative(beta, n: int):
    """``d^n/dbeta^n csc(beta)`` using ``csc * P_n(cot)``.

    ``P_0 = 1``, ``P_{n+1}(c) = -c P_n(c) - (1 + c^2) P_n'(c)``.
    """
    poly = np.array([1.0])
    for _ in range(n):
        poly = P.polyadd(-P.polymulx(poly), -P.polymul([1.0, 0.0, 1.0], P.polyder(poly)))
    beta = np.asarray(beta, dtype=float)
    return P.polyval(1.0 / np.tan(beta), poly) / np.sin(beta)


def iota_partial(alpha, beta, na: int, nb: int) -> np.ndarray:
    """Closed-form ``d^na/dalpha^na d^nb/dbeta^nb`` of ``iota(alpha, beta)``."""
    alpha, beta = np.broadcast_arrays(np.asarray(alpha, float), np.asarray(beta, float))
    sb = _trig_deriv(np.sin, beta, nb)
    x = _trig_deriv(np.cos, alpha, na) * sb
    y = _trig_deriv(np.sin, alpha, na) * sb
    z = _trig_deriv(np.cos, beta, nb) if na == 0 else np.zeros_like(beta)
    return from_imag(np.stack([x, y, z], axis=-1))


class IotaField(SliceFunction):
    """The unit imaginary direction ``iota(alpha, beta)``."""

    def _partial(self, pts, order):
        nt, nr, na, nb = order
        if nt or nr:
            return np.zeros(4)
        return iota_partial(pts.alpha, pts.beta, na, nb)


class FrameInvAlpha(SliceFunction):
    """``(iota_alpha)^{-1} = (sin(alpha) i - cos(alpha) j) / sin(beta)``."""

    def _partial(self, pts, order):
        nt, nr, na, nb = order
        if nt or nr:
            return np.zeros(4)
        c = csc_derivative(pts.beta, nb)
        x = _trig_deriv(np.sin, pts.alpha, na) * c
        y = -_trig_deriv(np.cos, pts.alpha, na) * c
        return from_imag(np.stack([x, y, np.zeros_like(x)], axis=-1))


class FrameInvBeta(SliceFunction):
    """``(iota_beta)^{-1} = -iota_beta``."""

    def _partial(self, pts, order):
        nt, nr, na, nb = order
        if nt or nr:
            return np.zeros(4)
        return -iota_partial(pts.alpha, pts.beta, na, nb + 1)


class SinBeta(SliceFunction):
    def _partial(self, pts, order):
        nt, nr, na, nb = order
        out = np.zeros(pts.shape + (4,))
        if not (nt or nr or na):
            out[..., 0] = _trig_deriv(np.sin, pts.beta, nb)
        return out


class CscBeta(SliceFunction):
    def _partial(self, pts, order):
        nt, nr, na, nb = order
        out = np.zeros(pts.shape + (4,))
        if not (nt or nr or na):
            out[..., 0] = csc_derivative(pts.beta, nb)
        return out


def _falling(n: np.ndarray, k: int) -> np.ndarray:
    out = np.ones_like(n, dtype=float)
    for j in range(k):
        out = out * (n - j)
    return out


class StemField(SliceFunction):
    """``Re g(z) A + iota Im g(z) A`` summed over terms, with ``z = t + i r``.

    ``stem(z, k)`` returns the ``k``-th complex derivatives of the ``m`` stem
    functions (shape ``z.shape + (m,)``); ``coeffs`` is the ``(m, 4)`` matrix of
    right quaternion coefficients.  Planar partials follow from
    ``d/dt = d/dz`` and ``d/dr = i d/dz``.
    """

    provenance = "user"

    def __init__(self, stem, coeffs):
        self.stem = stem
        self.coeffs = as_qarray(coeffs).reshape(-1, 4)

    def planar(self, pts, nt: int, nr: int):
        """``(d_t^nt d_r^nr U, d_t^nt d_r^nr V)`` with ``F = U + iota V``."""
        z = pts.t + 1j * pts.r
        D = self.stem(z, nt + nr) * (1j ** nr)
        return D.real @ self.coeffs, D.imag @ self.coeffs

    def _partial(self, pts, order):
        nt, nr, na, nb = order
        U, V = self.planar(pts, nt, nr)
        out = qmul(iota_partial(pts.alpha, pts.beta, na, nb), V)
        if na == 0 and nb == 0:
            out = out + U
        return out


class SeriesField(StemField):
    """Analytic backend for ``sum_n p^n a_n`` (``p^n = u_n + iota v_n``)."""

    provenance = "series"

    def __init__(self, f: QSeries):
        self.series = f
        degrees = np.arange(f.order + 1)

        def stem(z, k):
            n = degrees
            pw = np.where(n >= k, n - k, 0)
            return _falling(n, k) * z[..., None] ** pw

        super().__init__(stem, f.coeffs)


class CallbackField(SliceFunction):
    provenance = "user"

    def __init__(self, evaluator, partials):
        self.evaluator = evaluator
        self.partials = partials

    def _partial(self, pts, order):
        if order == ZERO_ORDER:
            return as_qarray(self.evaluator(*pts.coords()))
        return as_qarray(self.partials(*pts.coords(), order))


class FDField(SliceFunction):
    """Leaf whose partials are tensor-product central differences."""

    backend = "fd"
    provenance = "user"

    def __init__(self, evaluator, h: float = DEFAULT_H, provenance: str = "user"):
        self.evaluator = evaluator
        self.h = float(h)
        self.provenance = provenance

    def _partial(self, pts, order):
        if order == ZERO_ORDER:
            return as_qarray(self.evaluator(*pts.coords()))
        if max(order) > 4:
            raise ValueError(f"finite differences support orders up to 4, got {order}")
        stencils = [_STENCILS[k] if k else ((0,), (1.0,)) for k in order]
        out = np.zeros(pts.shape + (4,))
        for combo in iproduct(*(zip(*s) for s in stencils)):
            weight = math.prod(w for _, w in combo)
            if weight == 0.0:
                continue
            shift = [off * self.h for off, _ in combo]
            out = out + weight * as_qarray(self.evaluator(*pts.shifted(shift).coords()))
        return out / self.h ** sum(order)


# ------------------------------------------------------------------ combinators

class SumField(SliceFunction):
    def __init__(self, terms):
        self.terms = [(float(c), f) for c, f in terms]
        self.backend, self.h = _leaf_backend(*(f for _, f in self.terms))

    def _partial(self, pts, order):
        out = 0.0
        for c, f in self.terms:
            out = out + c * f.partial(pts, order)
        return out


class ProductField(SliceFunction):
    """Ordered pointwise quaternion product ``left * right``."""

    def __init__(self, left: SliceFunction, right: SliceFunction):
        self.left, self.right = left, right
        self.backend, self.h = _leaf_backend(left, right)

    def _partial(self, pts, order):
        out = 0.0
        for k in iproduct(*(range(o + 1) for o in order)):
            coef = math.prod(comb(o, ki) for o, ki in zip(order, k))
            rest = tuple(o - ki for o, ki in zip(order, k))
            out = out + coef * qmul(self.left.partial(pts, k), self.right.partial(pts, rest))
        return out


class ConjField(SliceFunction):
    def __init__(self, f: SliceFunction):
        self.f = f
        self.backend, self.h = _leaf_backend(f)

    def _partial(self, pts, order):
        return qconj(self.f.partial(pts, order))


class ComponentField(SliceFunction):
    """Real scalar field taken from one component (0..3) of ``f``."""

    def __init__(self, f: SliceFunction, component: int):
        self.f, self.component = f, component
        self.backend, self.h = _leaf_backend(f)

    def _partial(self, pts, order):
        src = self.f.partial(pts, order)
        out = np.zeros(src.shape)
        out[..., 0] = src[..., self.component]
        return out


class PartialField(SliceFunction):
    def __init__(self, f: SliceFunction, axis: int):
        self.f, self.axis = f, axis
        self.backend, self.h = _leaf_backend(f)

    def _partial(self, pts, order):
        return self.f.partial(pts, add_orders(order, unit_order(self.axis)))


IOTA = IotaField()
FRAME_INV_ALPHA = FrameInvAlpha()
FRAME_INV_BETA = FrameInvBeta()
SIN_BETA = SinBeta()
CSC_BETA = CscBeta()
UNIT_I = ConstField(I)


def iota_times(f: SliceFunction) -> SliceFunction:
    """The field ``iota * f``.

    A finite-difference leaf stays a leaf: its product with ``iota`` is
    differenced as one function rather than through the product rule.
    """
    if isinstance(f, FDField):
        inner = f.evaluator

        def evaluator(t, r, alpha, beta):
            return qmul(iota_vec(alpha, beta), inner(t, r, alpha, beta))

        out = FDField(evaluator, h=f.h, provenance=f.provenance)
        return out
    return ProductField(IOTA, f)


def d_iota_field(f: SliceFunction) -> SliceFunction:
    """``(iota_alpha)^{-1} df/dalpha + (iota_beta)^{-1} df/dbeta`` as a field."""
    return SumField([
        (1.0, ProductField(FRAME_INV_ALPHA, PartialField(f, AXES["alpha"]))),
        (1.0, ProductField(FRAME_INV_BETA, PartialField(f, AXES["beta"]))),
    ])


def exp_field(coeff=1.0) -> StemField:
    """``e^p a`` on the slice chart; every complex derivative is ``e^z``."""
    a = [float(coeff), 0, 0, 0] if isinstance(coeff, (int, float)) else coeff

    def stem(z, k):
        return np.exp(z)[..., None]

    return StemField(stem, [a])


def mobius_field(c: float, coeff=1.0) -> StemField:
    """``(p - c)^{-1} a`` for real ``c``; regular away from ``p = c``."""
    a = [float(coeff), 0, 0, 0] if isinstance(coeff, (int, float)) else coeff

    def stem(z, k):
        return ((-1.0) ** k * math.factorial(k) * (z - c) ** (-(k + 1)))[..., None]

    return StemField(stem, [a])
