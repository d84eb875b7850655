"""Quaternion algebra, the slice (Cullen) decomposition and the spherical iota frame.

Quaternions are stored as ``[t, x, y, z]`` for ``t + x i + y j + z k``.  The
array functions accept anything broadcastable to shape ``(..., 4)`` so the
same code serves single values and whole evaluation grids; :class:`Quaternion`
is a small immutable wrapper for scalar work.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NearZero, OnRealAxis, PolarSingularity

EPS_ZERO = 1e-10
EPS_AXIS = 1e-8
BETA_MIN = 1e-3


@dataclass(frozen=True)
class Quaternion:
    t: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    @classmethod
    def from_array(cls, arr) -> "Quaternion":
        t, x, y, z = (float(c) for c in np.asarray(arr, dtype=float).reshape(4))
        return cls(t, x, y, z)

    def as_array(self) -> np.ndarray:
        return np.array([self.t, self.x, self.y, self.z])

    def as_list(self) -> list[float]:
        return [self.t, self.x, self.y, self.z]

    @property
    def real(self) -> float:
        return self.t

    @property
    def imag(self) -> "Quaternion":
        return Quaternion(0.0, self.x, self.y, self.z)

    def conj(self) -> "Quaternion":
        return Quaternion(self.t, -self.x, -self.y, -self.z)

    def norm2(self) -> float:
        return self.t * self.t + self.x * self.x + self.y * self.y + self.z * self.z

    def norm(self) -> float:
        return math.sqrt(self.norm2())

    def inverse(self, eps_zero: float = EPS_ZERO) -> "Quaternion":
        return qinv(self, eps_zero)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Quaternion(self.t + other.t, self.x + other.x, self.y + other.y, self.z + other.z)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Quaternion(self.t - other.t, self.x - other.x, self.y - other.y, self.z - other.z)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return Quaternion(-self.t, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(self.t * other, self.x * other, self.y * other, self.z * other)
        if isinstance(other, Quaternion):
            return qmul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(self.t / other, self.x / other, self.y / other, self.z / other)
        return NotImplemented

    def isclose(self, other, tol: float = 1e-12) -> bool:
        return (self - _coerce(other)).norm() <= tol

    def __repr__(self) -> str:
        return f"Quaternion({self.t!r}, {self.x!r}, {self.y!r}, {self.z!r})"


def _coerce(value):
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, (int, float)):
        return Quaternion(float(value))
    return NotImplemented


def as_qarray(q) -> np.ndarray:
    """Return ``q`` as a float array with a trailing axis of length 4."""
    if isinstance(q, Quaternion):
        return q.as_array()
    arr = np.asarray(q, dtype=float)
    if arr.shape[-1:] != (4,):
        raise ValueError(f"expected trailing dimension 4, got shape {arr.shape}")
    return arr


def _wrap(result: np.ndarray, *inputs):
    if all(isinstance(q, Quaternion) for q in inputs):
        return Quaternion.from_array(result)
    return result


# Unit basis as arrays, in the order 1, i, j, k.
ONE = np.array([1.0, 0.0, 0.0, 0.0])
I = np.array([0.0, 1.0, 0.0, 0.0])
J = np.array([0.0, 0.0, 1.0, 0.0])
K = np.array([0.0, 0.0, 0.0, 1.0])
BASIS = np.stack([ONE, I, J, K])


def qmul(a, b):
    """Hamilton product ``a * b`` (order matters)."""
    A, B = as_qarray(a), as_qarray(b)
    a0, a1, a2, a3 = np.moveaxis(A, -1, 0)
    b0, b1, b2, b3 = np.moveaxis(B, -1, 0)
    out = np.stack(
        [
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        ],
        axis=-1,
    )
    return _wrap(out, a, b)


def qconj(q):
    Q = as_qarray(q)
    out = Q * np.array([1.0, -1.0, -1.0, -1.0])
    return _wrap(out, q)


def qnorm2(q) -> np.ndarray:
    Q = as_qarray(q)
    return np.sum(Q * Q, axis=-1)


def qnorm(q) -> np.ndarray:
    return np.sqrt(qnorm2(q))


def qinv(q, eps_zero: float = EPS_ZERO):
    """Multiplicative inverse ``conj(q) / |q|^2``.

    Raises :class:`NearZero` if any ``|q| < eps_zero``.
    """
    Q = as_qarray(q)
    n2 = qnorm2(Q)
    if np.any(np.sqrt(n2) < eps_zero):
        raise NearZero(f"cannot invert quaternion with norm below {eps_zero:g}")
    out = qconj(Q) / n2[..., None]
    return _wrap(out, q)


def pure_inv(q):
    """Inverse of a pure imaginary quaternion, ``-q / |q|^2``."""
    Q = as_qarray(q)
    out = -Q / qnorm2(Q)[..., None]
    return _wrap(out, q)


def from_imag(vec) -> np.ndarray:
    """Embed a 3-vector (or array of them) as pure imaginary quaternions."""
    vec = np.asarray(vec, dtype=float)
    return np.concatenate([np.zeros(vec.shape[:-1] + (1,)), vec], axis=-1)


def real_times(s, q) -> np.ndarray:
    """Scale quaternion array ``q`` by the real array ``s`` (broadcasting)."""
    return np.asarray(s, dtype=float)[..., None] * as_qarray(q)


@dataclass(frozen=True)
class CullenForm:
    """Writing ``q = t + r * iota`` with ``r >= 0`` and ``iota`` a unit imaginary."""

    t: float
    r: float
    iota: Quaternion

    def recompose(self) -> Quaternion:
        return Quaternion(self.t) + self.iota * self.r


def cullen_decompose(q, eps_axis: float = EPS_AXIS) -> CullenForm:
    q = q if isinstance(q, Quaternion) else Quaternion.from_array(q)
    r = math.sqrt(q.x * q.x + q.y * q.y + q.z * q.z)
    if r < eps_axis:
        raise OnRealAxis(f"imaginary norm {r:g} below {eps_axis:g}; iota undefined")
    return CullenForm(q.t, r, Quaternion(0.0, q.x / r, q.y / r, q.z / r))


def check_beta(beta, beta_min: float = BETA_MIN) -> None:
    beta = np.asarray(beta, dtype=float)
    if np.any(beta <= beta_min) or np.any(beta >= math.pi - beta_min):
        raise PolarSingularity(f"beta must lie in ({beta_min:g}, pi - {beta_min:g})")


def iota_vec(alpha, beta) -> np.ndarray:
    """Unit imaginary ``iota(alpha, beta)`` as a quaternion array."""
    alpha, beta = np.broadcast_arrays(np.asarray(alpha, float), np.asarray(beta, float))
    sb = np.sin(beta)
    return from_imag(np.stack([np.cos(alpha) * sb, np.sin(alpha) * sb, np.cos(beta)], axis=-1))


def iota_alpha_vec(alpha, beta) -> np.ndarray:
    alpha, beta = np.broadcast_arrays(np.asarray(alpha, float), np.asarray(beta, float))
    sb = np.sin(beta)
    return from_imag(np.stack([-np.sin(alpha) * sb, np.cos(alpha) * sb, np.zeros_like(sb)], axis=-1))


def iota_beta_vec(alpha, beta) -> np.ndarray:
    alpha, beta = np.broadcast_arrays(np.asarray(alpha, float), np.asarray(beta, float))
    cb = np.cos(beta)
    return from_imag(np.stack([np.cos(alpha) * cb, np.sin(alpha) * cb, -np.sin(beta)], axis=-1))


@dataclass(frozen=True)
class IotaFrame:
    """The direction ``iota`` and its angular tangents at ``(alpha, beta)``."""

    alpha: float
    beta: float
    iota: Quaternion
    iota_alpha: Quaternion
    iota_beta: Quaternion
    iota_alpha_inv: Quaternion
    iota_beta_inv: Quaternion


def iota_frame(alpha: float, beta: float, beta_min: float = BETA_MIN) -> IotaFrame:
    check_beta(beta, beta_min)
    ia = iota_alpha_vec(alpha, beta)
    ib = iota_beta_vec(alpha, beta)
    return IotaFrame(
        alpha=float(alpha),
        beta=float(beta),
        iota=Quaternion.from_array(iota_vec(alpha, beta)),
        iota_alpha=Quaternion.from_array(ia),
        iota_beta=Quaternion.from_array(ib),
        iota_alpha_inv=Quaternion.from_array(pure_inv(ia)),
        iota_beta_inv=Quaternion.from_array(pure_inv(ib)),
    )


def to_cartesian(t, r, alpha, beta) -> np.ndarray:
    """Chart ``(t, r, alpha, beta) -> t + r * iota`` as a quaternion array."""
    return np.asarray(t, float)[..., None] * ONE + real_times(r, iota_vec(alpha, beta))


def to_spherical(q):
    """Inverse chart; returns ``(t, r, alpha, beta)`` arrays (alpha in [0, 2 pi))."""
    Q = as_qarray(q)
    t, x, y, z = np.moveaxis(Q, -1, 0)
    r = np.sqrt(x * x + y * y + z * z)
    beta = np.arccos(np.clip(z / np.where(r > 0, r, 1.0), -1.0, 1.0))
    alpha = np.mod(np.arctan2(y, x), 2 * math.pi)
    return t, r, alpha, beta
