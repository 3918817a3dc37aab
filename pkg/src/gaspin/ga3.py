"""Geometric algebra of three-dimensional Euclidean space.

Multivectors are stored as 8 real coefficients over the fixed basis

    [1, s1, s2, s3, Is1, Is2, Is3, I]

where ``s_k`` are the orthonormal vectors, ``I = s1 s2 s3`` is the
pseudoscalar and ``Is_k`` are the bivectors ``I s_k`` (so ``Is1 = s2 s3``,
``Is2 = s3 s1``, ``Is3 = s1 s2``).  The geometric product is evaluated
through a precomputed 8x8x8 structure-constant table.
"""

from __future__ import annotations

import math
from numbers import Real

import numpy as np

BASIS_LABELS = ("1", "s1", "s2", "s3", "Is1", "Is2", "Is3", "I")
GRADES = np.array([0, 1, 1, 1, 2, 2, 2, 3])

# Each basis element as (sign, blade bitmask) with bit k <-> s_{k+1}.
_BLADES = (
    (1, 0b000),
    (1, 0b001),
    (1, 0b010),
    (1, 0b100),
    (1, 0b110),   # s2 s3
    (-1, 0b101),  # s3 s1 = -s1 s3
    (1, 0b011),   # s1 s2
    (1, 0b111),
)


def _reorder_sign(a: int, b: int) -> int:
    """Sign from sorting the vector factors of blade ``a`` times blade ``b``."""
    a >>= 1
    swaps = 0
    while a:
        swaps += bin(a & b).count("1")
        a >>= 1
    return -1 if swaps & 1 else 1


def _build_table() -> np.ndarray:
    by_mask = {mask: (sign, idx) for idx, (sign, mask) in enumerate(_BLADES)}
    table = np.zeros((8, 8, 8))
    for i, (si, mi) in enumerate(_BLADES):
        for j, (sj, mj) in enumerate(_BLADES):
            sk, k = by_mask[mi ^ mj]
            # e_i e_j = si sj blade(mi) blade(mj) = si sj r blade(mi^mj), blade = sk e_k
            table[i, j, k] = si * sj * _reorder_sign(mi, mj) * sk
    table.setflags(write=False)
    return table


PRODUCT_TABLE = _build_table()
_TABLE_FLAT = PRODUCT_TABLE.reshape(8, 64)
_REVERSE_SIGNS = np.array([1.0, 1.0, 1.0, 1.0, -1.0, -1.0, -1.0, -1.0])


class Multivector3:
    """Immutable element of the 3D geometric algebra."""

    __slots__ = ("_c",)

    def __init__(self, coefficients=None):
        if coefficients is None:
            c = np.zeros(8)
        else:
            c = np.array(coefficients, dtype=float)
            if c.shape != (8,):
                raise ValueError(f"expected 8 coefficients, got shape {c.shape}")
        c.setflags(write=False)
        self._c = c

    @classmethod
    def scalar(cls, value: float) -> Multivector3:
        c = np.zeros(8)
        c[0] = value
        return cls(c)

    @classmethod
    def basis(cls, index: int) -> Multivector3:
        c = np.zeros(8)
        c[index] = 1.0
        return cls(c)

    @classmethod
    def bivector(cls, b1: float, b2: float, b3: float) -> Multivector3:
        """``b1 Is1 + b2 Is2 + b3 Is3``."""
        c = np.zeros(8)
        c[4:7] = (b1, b2, b3)
        return cls(c)

    @property
    def coefficients(self) -> np.ndarray:
        return self._c

    def __getitem__(self, index):
        return self._c[index]

    def __add__(self, other):
        if isinstance(other, Multivector3):
            return Multivector3(self._c + other._c)
        if isinstance(other, Real):
            return self + Multivector3.scalar(float(other))
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Multivector3):
            return Multivector3(self._c - other._c)
        if isinstance(other, Real):
            return self - Multivector3.scalar(float(other))
        return NotImplemented

    def __rsub__(self, other):
        return -self + other

    def __neg__(self):
        return Multivector3(-self._c)

    def __mul__(self, other):
        if isinstance(other, Multivector3):
            return geometric_product(self, other)
        if isinstance(other, Real):
            return Multivector3(self._c * float(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Real):
            return Multivector3(self._c * float(other))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Real):
            return Multivector3(self._c / float(other))
        return NotImplemented

    def __invert__(self):
        return reverse(self)

    def grade(self, k: int) -> Multivector3:
        return grade_project(self, k)

    def scalar_part(self) -> float:
        return float(self._c[0])

    def is_close(self, other: Multivector3, atol: float = 1e-12) -> bool:
        return bool(np.max(np.abs(self._c - other._c)) <= atol)

    def __repr__(self):
        terms = [f"{v:+.6g}*{lab}" for v, lab in zip(self._c, BASIS_LABELS) if v != 0.0]
        return "Multivector3(" + (" ".join(terms) if terms else "0") + ")"


ONE = Multivector3.basis(0)
S1, S2, S3 = (Multivector3.basis(k) for k in (1, 2, 3))
IS1, IS2, IS3 = (Multivector3.basis(k) for k in (4, 5, 6))
I = Multivector3.basis(7)
SIGMA = (S1, S2, S3)
I_SIGMA = (IS1, IS2, IS3)


def geometric_product(a: Multivector3, b: Multivector3) -> Multivector3:
    """Geometric product ``ab``."""
    m = (a._c @ _TABLE_FLAT).reshape(8, 8)
    return Multivector3(b._c @ m)


def reverse(a: Multivector3) -> Multivector3:
    return Multivector3(a._c * _REVERSE_SIGNS)


def grade_project(a: Multivector3, k: int) -> Multivector3:
    """Grade-``k`` part of ``a``; ``k`` must be 0, 1, 2 or 3."""
    if k not in (0, 1, 2, 3):
        raise ValueError(f"grade must be 0..3, got {k!r}")
    return Multivector3(np.where(GRADES == k, a._c, 0.0))


def exp_bivector(b: Multivector3) -> Multivector3:
    """Exponential of a pure bivector, ``cos|B| + B/|B| sin|B|``.

    Since ``B^2 = -|B|^2`` for any bivector in 3D the closed form is exact.
    """
    if np.any(b._c[GRADES != 2] != 0.0):
        raise ValueError("exp_bivector expects a pure grade-2 multivector")
    mag = math.sqrt(float(b._c[4:7] @ b._c[4:7]))
    if mag == 0.0:
        return ONE
    c = np.zeros(8)
    c[0] = math.cos(mag)
    c[4:7] = b._c[4:7] * (math.sin(mag) / mag)
    return Multivector3(c)


def bivector_dot(a: Multivector3, b: Multivector3) -> float:
    """Inner product of two bivectors, the scalar part ``<AB>``."""
    if np.any(a._c[GRADES != 2] != 0.0) or np.any(b._c[GRADES != 2] != 0.0):
        raise ValueError("bivector_dot expects pure grade-2 multivectors")
    return float(-(a._c[4:7] @ b._c[4:7]))


def scalar_part(a: Multivector3) -> float:
    return float(a._c[0])


def random_multivector(rng: np.random.Generator) -> Multivector3:
    return Multivector3(rng.normal(size=8))
