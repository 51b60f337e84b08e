"""Unit quaternion arithmetic.

Quaternions are stored as float arrays with trailing axis ``(a, b, c, d)``
meaning ``a + bi + cj + dk``; pairs in SU(2) x SU(2) use a trailing axis of
length 8.  All array functions broadcast over leading axes.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

UNIT_TOL = 1e-9


class Quaternion(NamedTuple):
    a: float
    b: float
    c: float
    d: float

    def __mul__(self, other):
        return Quaternion(*qmul(self, other))

    def conj(self) -> "Quaternion":
        return Quaternion(self.a, -self.b, -self.c, -self.d)


class QuatPair(NamedTuple):
    """An element ``(q1, q2)`` of SU(2) x SU(2)."""

    q1: Quaternion
    q2: Quaternion

    def __mul__(self, other):
        r = pair_mul(self.array(), as_pair_array(other))
        return QuatPair(Quaternion(*r[:4]), Quaternion(*r[4:]))

    def array(self) -> np.ndarray:
        return np.concatenate([self.q1, self.q2]).astype(float)


ONE = Quaternion(1.0, 0.0, 0.0, 0.0)


def as_pair_array(p) -> np.ndarray:
    if isinstance(p, QuatPair):
        return p.array()
    return np.asarray(p, dtype=float)


def normalize(q: np.ndarray) -> np.ndarray:
    q = np.asarray(q, dtype=float)
    return q / np.linalg.norm(q, axis=-1, keepdims=True)


def qmul(x, y) -> np.ndarray:
    """Hamilton product, renormalized to unit norm."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    a1, b1, c1, d1 = np.moveaxis(x, -1, 0)
    a2, b2, c2, d2 = np.moveaxis(y, -1, 0)
    out = np.stack(
        [
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ],
        axis=-1,
    )
    return normalize(out)


def qconj(q) -> np.ndarray:
    q = np.asarray(q, dtype=float)
    return q * np.array([1.0, -1.0, -1.0, -1.0])


def pair_mul(x, y) -> np.ndarray:
    """Componentwise product of pairs (trailing axis of length 8)."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return np.concatenate([qmul(x[..., :4], y[..., :4]), qmul(x[..., 4:], y[..., 4:])], axis=-1)


def pair_inv(x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    return x * np.array([1.0, -1.0, -1.0, -1.0, 1.0, -1.0, -1.0, -1.0])


def su2_trace(q) -> np.ndarray | float:
    """Trace of the 2x2 SU(2) matrix of ``q``, which is ``2a``."""
    q = np.asarray(q, dtype=float)
    t = 2.0 * q[..., 0]
    return float(t) if t.ndim == 0 else t


def canonical_key(p, grid: float = 1e-6) -> tuple[int, ...]:
    """Grid-cell key of a quaternion pair; nearby pairs share a key."""
    if grid <= 0:
        raise ValueError("grid must be positive")
    cells = np.floor(as_pair_array(p) / grid + 0.5).astype(np.int64) + 0
    return tuple(int(c) for c in cells)


def probe_keys(p, grid: float = 1e-6) -> list[tuple[int, ...]]:
    """Primary key followed by keys of neighbouring cells for coordinates near a cell edge."""
    scaled = as_pair_array(p) / grid + 0.5
    base = np.floor(scaled).astype(np.int64)
    frac = scaled - base
    options = []
    for c, f in zip(base.tolist(), frac.tolist()):
        if f < 0.1:
            options.append((c, c - 1))
        elif f > 0.9:
            options.append((c, c + 1))
        else:
            options.append((c,))
    keys = [()]
    for opt in options:
        keys = [k + (c,) for k in keys for c in opt]
    return keys


def is_unit(q, tol: float = UNIT_TOL) -> bool:
    q = np.asarray(q, dtype=float)
    return bool(np.all(np.abs(np.sum(q * q, axis=-1) - 1.0) < tol))


def from_angle(theta: float) -> np.ndarray:
    """The quaternion cos(theta) + i sin(theta)."""
    return np.array([np.cos(theta), np.sin(theta), 0.0, 0.0])


def embed(q, second=None) -> np.ndarray:
    """Pair ``(q, second)``, with ``second`` defaulting to 1."""
    q = np.asarray(q, dtype=float)
    if second is None:
        second = np.broadcast_to(np.array(ONE), q.shape)
    return np.concatenate([q, np.asarray(second, dtype=float)], axis=-1)
