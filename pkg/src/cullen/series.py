"""Truncated quaternionic power series ``sum_n p^n a_n`` and their regular product.

Coefficients sit to the right of the powers.  Every ring operation is computed
on degrees ``0..N`` only; because coefficient ``n`` of a product depends on
degrees ``<= n`` alone, truncation commutes with the operations and the
truncated ring is exactly associative.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import NearZero, NotReal, NotUnit, ParseError
from .quaternion import EPS_ZERO, Quaternion, _wrap, as_qarray, qconj, qinv, qmul, qnorm

DEFAULT_ORDER = 16
EPS_UNIT = 1e-6
REAL_CHECK_TOL = 1e-12
REAL_FAIL_TOL = 1e-9


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, dtype=float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class QSeries:
    """Dense coefficients ``a_0..a_N`` stored as an ``(N + 1, 4)`` array."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = as_qarray(self.coeffs)
        if c.ndim != 2 or c.shape[0] < 1:
            raise ValueError(f"coefficients must have shape (N+1, 4), got {c.shape}")
        if not np.all(np.isfinite(c)):
            raise ValueError("series coefficients must be finite")
        object.__setattr__(self, "coeffs", _frozen(c))

    @property
    def order(self) -> int:
        return self.coeffs.shape[0] - 1

    @classmethod
    def zeros(cls, order: int = DEFAULT_ORDER) -> "QSeries":
        return cls(np.zeros((order + 1, 4)))

    @classmethod
    def monomial(cls, n: int, a=1.0, order: int = DEFAULT_ORDER) -> "QSeries":
        """The series ``p^n a`` truncated at ``order``."""
        c = np.zeros((order + 1, 4))
        if n <= order:
            c[n] = _as_coeff(a)
        return cls(c)

    @classmethod
    def constant(cls, a, order: int = DEFAULT_ORDER) -> "QSeries":
        return cls.monomial(0, a, order)

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> "QSeries":
        return cls.monomial(0, 1.0, order)

    @classmethod
    def random(cls, rng: np.random.Generator, order: int = DEFAULT_ORDER,
               radius: float = 1.0, min_a0: float = 0.0) -> "QSeries":
        """Coefficients uniform in the 4-ball of ``radius``.

        ``a_0`` is redrawn until ``|a_0| >= min_a0``.
        """
        c = random_ball(rng, order + 1, radius)
        while np.linalg.norm(c[0]) < min_a0:
            c[0] = random_ball(rng, 1, radius)[0]
        return cls(c)

    def with_order(self, order: int) -> "QSeries":
        """Pad with zeros or truncate to the given order."""
        c = np.zeros((order + 1, 4))
        m = min(order, self.order) + 1
        c[:m] = self.coeffs[:m]
        return QSeries(c)

    def is_real(self, tol: float = 0.0) -> bool:
        return bool(np.all(np.abs(self.coeffs[:, 1:]) <= tol))

    def __add__(self, other: "QSeries") -> "QSeries":
        a, b = _common(self, other)
        return QSeries(a + b)

    def __sub__(self, other: "QSeries") -> "QSeries":
        a, b = _common(self, other)
        return QSeries(a - b)

    def __neg__(self) -> "QSeries":
        return QSeries(-self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.coeffs.shape == other.coeffs.shape and bool(np.all(self.coeffs == other.coeffs))

    __hash__ = None

    def scale(self, s: float) -> "QSeries":
        return QSeries(self.coeffs * float(s))

    def right_mul(self, a) -> "QSeries":
        """Coefficient-wise right multiplication ``sum p^n (a_n a)``."""
        return QSeries(qmul(self.coeffs, _as_coeff(a)))

    def __call__(self, p):
        return evaluate(self, p)

    def star(self, other: "QSeries") -> "QSeries":
        return star_mul(self, other)

    def conj(self) -> "QSeries":
        return regular_conjugate(self)

    def max_abs_diff(self, other: "QSeries") -> float:
        a, b = _common(self, other)
        return float(np.max(np.abs(a - b)))

    def __repr__(self) -> str:
        return f"QSeries(order={self.order}, coeffs={self.coeffs.tolist()!r})"


@dataclass(frozen=True, eq=False)
class RSeries:
    """A series with real coefficients (the symmetrization of a ``QSeries``)."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=float)
        if c.ndim != 1 or c.size < 1:
            raise ValueError(f"real coefficients must be 1-d and nonempty, got {c.shape}")
        object.__setattr__(self, "coeffs", _frozen(c))

    @property
    def order(self) -> int:
        return self.coeffs.shape[0] - 1

    def to_qseries(self) -> QSeries:
        c = np.zeros((self.order + 1, 4))
        c[:, 0] = self.coeffs
        return QSeries(c)

    def inverse(self, eps_unit: float = EPS_UNIT) -> "RSeries":
        """Multiplicative inverse truncated at the same order.

        ``b_0 = 1/s_0``, ``b_n = -(1/s_0) sum_{k=1..n} s_k b_{n-k}``.
        """
        s = self.coeffs
        if abs(s[0]) < eps_unit:
            raise NotUnit(f"constant term {s[0]:g} too small to invert")
        b = np.zeros_like(s)
        b[0] = 1.0 / s[0]
        for n in range(1, len(s)):
            b[n] = -b[0] * np.dot(s[1:n + 1], b[n - 1::-1])
        return RSeries(b)

    def __repr__(self) -> str:
        return f"RSeries(order={self.order}, coeffs={self.coeffs.tolist()!r})"


def _as_coeff(a) -> np.ndarray:
    if isinstance(a, (int, float)):
        return np.array([float(a), 0.0, 0.0, 0.0])
    return as_qarray(a)


def _common(f: QSeries, g: QSeries):
    n = min(f.order, g.order) + 1
    return f.coeffs[:n], g.coeffs[:n]


def random_ball(rng: np.random.Generator, count: int, radius: float = 1.0) -> np.ndarray:
    """``count`` points uniform in the 4-dimensional ball of ``radius``."""
    g = rng.standard_normal((count, 4))
    g /= np.linalg.norm(g, axis=1, keepdims=True)
    rad = radius * rng.random(count) ** 0.25
    return g * rad[:, None]


def star_mul(f: QSeries, g: QSeries) -> QSeries:
    """Regular product: ``c_n = sum_{k<=n} a_k b_{n-k}`` truncated at the smaller order."""
    a, b = _common(f, g)
    c = np.empty_like(a)
    for n in range(a.shape[0]):
        c[n] = qmul(a[: n + 1], b[n::-1]).sum(axis=0)
    return QSeries(c)


def evaluate(f: QSeries, p):
    """``sum_n p^n a_n`` by Horner's rule with left multiplication by ``p``.

    ``p`` may be a :class:`Quaternion` or an array of shape ``(..., 4)``.
    """
    P = as_qarray(p)
    c = f.coeffs
    acc = np.broadcast_to(c[-1], P.shape).copy()
    for n in range(f.order - 1, -1, -1):
        acc = qmul(P, acc) + c[n]
    return _wrap(acc, p)


def regular_conjugate(f: QSeries) -> QSeries:
    return QSeries(qconj(f.coeffs))


def symmetrization(f: QSeries) -> RSeries:
    """Real coefficients of ``f * f^c``.

    Raises :class:`NotReal` if the imaginary parts exceed ``REAL_FAIL_TOL``,
    which can only happen through a bug in the product.
    """
    s = star_mul(f, regular_conjugate(f)).coeffs
    scale = max(1.0, float(np.max(np.abs(s[:, 0]))))
    worst = float(np.max(np.abs(s[:, 1:])))
    if worst > REAL_FAIL_TOL * scale:
        raise NotReal(f"symmetrization has imaginary part {worst:g}")
    return RSeries(s[:, 0])


def reciprocal(f: QSeries, eps_unit: float = EPS_UNIT) -> QSeries:
    """Regular reciprocal ``(1/f^s) * f^c``."""
    if float(np.linalg.norm(f.coeffs[0])) < eps_unit:
        raise NotUnit(f"|a_0| = {np.linalg.norm(f.coeffs[0]):g} below {eps_unit:g}")
    inv_s = symmetrization(f).inverse(eps_unit=eps_unit * eps_unit)
    return star_mul(inv_s.to_qseries(), regular_conjugate(f))


def closed_formula_eval(f: QSeries, g: QSeries, p, eps_zero: float = EPS_ZERO):
    """Evaluate ``f(p) g(f(p)^{-1} p f(p))``."""
    P = as_qarray(p)
    fp = evaluate(f, P)
    if np.any(qnorm(fp) < eps_zero):
        raise NearZero(f"f(p) vanishes (norm below {eps_zero:g}) at an evaluation point")
    moved = qmul(qmul(qinv(fp, eps_zero), P), fp)
    return _wrap(qmul(fp, evaluate(g, moved)), p)


def slice_components(n: int, t, r):
    """Real and imaginary parts of ``(t + i r)^n``: the slice form of ``p^n``."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    z = (np.asarray(t, dtype=float) + 1j * np.asarray(r, dtype=float)) ** n
    if np.ndim(z) == 0:
        return float(z.real), float(z.imag)
    return z.real, z.imag


# ---------------------------------------------------------------- file format

def series_to_dict(f: QSeries) -> dict:
    # adding 0.0 turns -0.0 into 0.0 so conjugates print cleanly
    return {"order": f.order, "coeffs": (f.coeffs + 0.0).tolist()}


def series_from_dict(doc) -> QSeries:
    try:
        order = doc["order"]
        coeffs = doc["coeffs"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"series document needs 'order' and 'coeffs': {exc}") from None
    if not isinstance(order, int) or isinstance(order, bool) or order < 0:
        raise ParseError(f"'order' must be a non-negative integer, got {order!r}")
    if not isinstance(coeffs, list) or len(coeffs) != order + 1:
        raise ParseError(f"'coeffs' must be a list of {order + 1} quaternions")
    rows = []
    for n, row in enumerate(coeffs):
        if (not isinstance(row, list) or len(row) != 4
                or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in row)):
            raise ParseError(f"coeffs[{n}] must be a list [t, x, y, z] of numbers")
        if not all(math.isfinite(v) for v in row):
            raise ParseError(f"coeffs[{n}] is not finite")
        rows.append([float(v) for v in row])
    return QSeries(np.array(rows, dtype=float).reshape(order + 1, 4))


def dumps(f: QSeries) -> str:
    return json.dumps(series_to_dict(f))


def loads(text: str) -> QSeries:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return series_from_dict(doc)


def save(f: QSeries, path) -> None:
    Path(path).write_text(dumps(f) + "\n")


def load(path) -> QSeries:
    return loads(Path(path).read_text())
