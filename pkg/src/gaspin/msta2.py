"""Two-particle states and observables in the correlated product algebra.

The algebra is spanned by products of ``{1, Is_j^1}`` and ``{1, Is_k^2}``:
bivectors belonging to different particles commute, so it is the tensor
product of two copies of the even subalgebra of ``ga3``.  Coefficients are
stored in the order

    1, Is1^1, Is2^1, Is3^1, Is1^2, Is2^2, Is3^2,
    Is1^1 Is1^2, Is1^1 Is2^2, ..., Is3^1 Is3^2

with the nine product terms row-major in (j, k), j labelling particle 1.
In the full relativistic algebra the product terms are 4-vectors; here
they are simply products of commuting bivectors and reverse to themselves.

Physical states satisfy ``psi E = psi`` with the correlator
``E = (1 - Is3^1 Is3^2)/2``; the complex structure is ``J = E Is3^1``.
"""

from __future__ import annotations

import math
from numbers import Real
from typing import Iterable

import numpy as np

from gaspin import ga3
from gaspin.errors import DomainError
from gaspin.spinor1 import Spinor1

PROJECTION_TOL = 1e-10
NORMALIZATION_TOL = 1e-10
REPROJECT_TOL = 1e-13

_EVEN = [0, 4, 5, 6]
# Quaternion structure constants of {1, Is1, Is2, Is3}.
_QUAT = ga3.PRODUCT_TABLE[np.ix_(_EVEN, _EVEN, _EVEN)]

# (space-1 index, space-2 index) of each stored coefficient, 0 meaning the scalar.
PAIRS = (
    [(0, 0)]
    + [(j, 0) for j in (1, 2, 3)]
    + [(0, k) for k in (1, 2, 3)]
    + [(j, k) for j in (1, 2, 3) for k in (1, 2, 3)]
)
_INDEX = {pair: n for n, pair in enumerate(PAIRS)}
LABELS = tuple(
    "1" if (j, k) == (0, 0)
    else f"Is{j}^1" if k == 0
    else f"Is{k}^2" if j == 0
    else f"Is{j}^1 Is{k}^2"
    for j, k in PAIRS
)


def _build_table() -> np.ndarray:
    table = np.zeros((16, 16, 16))
    for a, (p, q) in enumerate(PAIRS):
        for b, (r, s) in enumerate(PAIRS):
            for t in range(4):
                for u in range(4):
                    v = _QUAT[p, r, t] * _QUAT[q, s, u]
                    if v:
                        table[a, b, _INDEX[(t, u)]] += v
    table.setflags(write=False)
    return table


PRODUCT_TABLE = _build_table()
_TABLE_FLAT = PRODUCT_TABLE.reshape(16, 256)
_REVERSE_SIGNS = np.array([1.0] + [-1.0] * 6 + [1.0] * 9)


class TwoParticleMV:
    """Immutable element of the 16-dimensional two-particle algebra."""

    __slots__ = ("_c",)

    def __init__(self, coefficients=None):
        if coefficients is None:
            c = np.zeros(16)
        else:
            c = np.array(coefficients, dtype=float)
            if c.shape != (16,):
                raise ValueError(f"expected 16 coefficients, got shape {c.shape}")
        c.setflags(write=False)
        self._c = c

    @classmethod
    def scalar(cls, value: float) -> TwoParticleMV:
        c = np.zeros(16)
        c[0] = value
        return cls(c)

    @classmethod
    def term(cls, j: int, k: int, value: float = 1.0) -> TwoParticleMV:
        """``value * Is_j^1 Is_k^2`` with index 0 standing for the scalar 1."""
        c = np.zeros(16)
        c[_INDEX[(j, k)]] = value
        return cls(c)

    @property
    def coefficients(self) -> np.ndarray:
        return self._c

    def __getitem__(self, index):
        return self._c[index]

    def single_bivectors(self, particle: int) -> np.ndarray:
        """Coefficients of ``Is1^a, Is2^a, Is3^a``."""
        return self._c[1:4] if particle == 1 else self._c[4:7]

    def product_terms(self) -> np.ndarray:
        """3x3 coefficients of ``Is_j^1 Is_k^2``."""
        return self._c[7:].reshape(3, 3)

    def __add__(self, other):
        if isinstance(other, TwoParticleMV):
            return TwoParticleMV(self._c + other._c)
        if isinstance(other, Real):
            return self + TwoParticleMV.scalar(float(other))
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, TwoParticleMV):
            return TwoParticleMV(self._c - other._c)
        if isinstance(other, Real):
            return self - TwoParticleMV.scalar(float(other))
        return NotImplemented

    def __rsub__(self, other):
        return -self + other

    def __neg__(self):
        return TwoParticleMV(-self._c)

    def __mul__(self, other):
        if isinstance(other, TwoParticleMV):
            m = (self._c @ _TABLE_FLAT).reshape(16, 16)
            return TwoParticleMV(other._c @ m)
        if isinstance(other, Real):
            return TwoParticleMV(self._c * float(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Real):
            return TwoParticleMV(self._c * float(other))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Real):
            return TwoParticleMV(self._c / float(other))
        return NotImplemented

    def __invert__(self):
        return TwoParticleMV(self._c * _REVERSE_SIGNS)

    def scalar_part(self) -> float:
        return float(self._c[0])

    def is_close(self, other: TwoParticleMV, atol: float = 1e-12) -> bool:
        return bool(np.max(np.abs(self._c - other._c)) <= atol)

    def __repr__(self):
        terms = [f"{v:+.6g}*{lab}" for v, lab in zip(self._c, LABELS) if v != 0.0]
        return "TwoParticleMV(" + (" ".join(terms) if terms else "0") + ")"


def embed(psi: Spinor1 | ga3.Multivector3, particle: int) -> TwoParticleMV:
    """Place an even single-particle multivector in the given particle space."""
    if particle not in (1, 2):
        raise ValueError(f"particle must be 1 or 2, got {particle!r}")
    if isinstance(psi, ga3.Multivector3):
        psi = Spinor1.from_multivector(psi)
    c = np.zeros(16)
    c[0] = psi.a0
    c[1:4] = (psi.a1, psi.a2, psi.a3) if particle == 1 else (0.0, 0.0, 0.0)
    c[4:7] = (psi.a1, psi.a2, psi.a3) if particle == 2 else (0.0, 0.0, 0.0)
    return TwoParticleMV(c)


ONE = TwoParticleMV.scalar(1.0)
ISIGMA1 = tuple(TwoParticleMV.term(k, 0) for k in (1, 2, 3))
ISIGMA2 = tuple(TwoParticleMV.term(0, k) for k in (1, 2, 3))
E = 0.5 * (ONE - ISIGMA1[2] * ISIGMA2[2])
J = 0.5 * (ISIGMA1[2] + ISIGMA2[2])

# |0> <-> 1 and |1> <-> -Is2 in each space.
_KET = (ga3.ONE, -ga3.IS2)


def _isigma(particle: int, k: int) -> TwoParticleMV:
    if particle not in (1, 2):
        raise ValueError(f"particle must be 1 or 2, got {particle!r}")
    if k not in (1, 2, 3):
        raise ValueError(f"Pauli axis must be 1, 2 or 3, got {k!r}")
    return (ISIGMA1 if particle == 1 else ISIGMA2)[k - 1]


def projection_error(psi: TwoParticleMV) -> float:
    """``max |psi E - psi|`` over the coefficients."""
    return float(np.max(np.abs((psi * E).coefficients - psi.coefficients)))


def require_projected(psi: TwoParticleMV) -> None:
    err = projection_error(psi)
    if err >= PROJECTION_TOL:
        raise DomainError(f"state is not E-projected (|psi E - psi| = {err:.3g})")


def require_normalized(psi: TwoParticleMV) -> None:
    require_projected(psi)
    n = inner_product2(psi, psi).real
    if abs(n - 1.0) >= NORMALIZATION_TOL:
        raise DomainError(f"state is not normalized (<psi|psi> = {n:.12g})")


def product_state(psi: Spinor1, phi: Spinor1) -> TwoParticleMV:
    """``|psi, phi>`` as ``psi^1 phi^2 E``."""
    return embed(psi, 1) * embed(phi, 2) * E


def apply_phase(psi: TwoParticleMV, chi: float) -> TwoParticleMV:
    """Right-multiply a projected state by ``exp(J chi)``."""
    return psi * (math.cos(chi) * E + math.sin(chi) * J)


def from_complex4(c00: complex, c01: complex, c10: complex, c11: complex) -> TwoParticleMV:
    amps = ((c00, c01), (c10, c11))
    out = TwoParticleMV()
    for i in (0, 1):
        for j in (0, 1):
            c = complex(amps[i][j])
            if c == 0:
                continue
            ket = embed(_KET[i], 1) * embed(_KET[j], 2)
            out = out + ket * (c.real * E + c.imag * J)
    return out


_BASIS4 = tuple(from_complex4(*row) for row in np.eye(4))


def to_complex4(psi: TwoParticleMV) -> np.ndarray:
    """Amplitudes ``(c00, c01, c10, c11)`` of a projected state."""
    require_projected(psi)
    return np.array([inner_product2(b, psi) for b in _BASIS4])


def apply_pauli2(particle: int, k: int, psi: TwoParticleMV) -> TwoParticleMV:
    """Pauli operator ``k`` on one particle: ``-Is_k^a psi J``."""
    b = _isigma(particle, k)
    require_projected(psi)
    return _reproject(-(b * psi * J))


def apply_i2(psi: TwoParticleMV) -> TwoParticleMV:
    """Multiplication by i: ``psi J``."""
    require_projected(psi)
    return _reproject(psi * J)


def _reproject(psi: TwoParticleMV) -> TwoParticleMV:
    if projection_error(psi) > REPROJECT_TOL:
        return psi * E
    return psi


def inner_product2(psi: TwoParticleMV, phi: TwoParticleMV) -> complex:
    """``<psi|phi>`` as ``2<phi E psi~> - 2<phi J psi~> i``."""
    rev = ~psi
    re = 2.0 * (phi * E * rev).scalar_part()
    im = -2.0 * (phi * J * rev).scalar_part()
    return complex(re, im)


def observable_E(psi: TwoParticleMV) -> TwoParticleMV:
    """``psi E psi~``: scalar plus product-bivector terms."""
    return psi * E * ~psi


def observable_J(psi: TwoParticleMV) -> TwoParticleMV:
    """``psi J psi~``: single-particle bivector terms only."""
    return psi * J * ~psi


def polarization_from_observable(obs_j: TwoParticleMV, particle: int) -> np.ndarray:
    """``P_k = -2 Is_k^a . obs_j``; also valid for weighted sums over pure states."""
    return np.array([-2.0 * (_isigma(particle, k) * obs_j).scalar_part() for k in (1, 2, 3)])


def correlations_from_observable(obs_e: TwoParticleMV) -> np.ndarray:
    """``c_jk = -2 (Is_j^1 Is_k^2) . obs_e`` as a 3x3 array."""
    c = np.empty((3, 3))
    for j in (1, 2, 3):
        for k in (1, 2, 3):
            c[j - 1, k - 1] = -2.0 * (TwoParticleMV.term(j, k) * obs_e).scalar_part()
    return c


def reduced_polarization(psi: TwoParticleMV, particle: int) -> np.ndarray:
    """Bloch vector of the reduced state of ``particle``."""
    if particle not in (1, 2):
        raise ValueError(f"particle must be 1 or 2, got {particle!r}")
    require_normalized(psi)
    return polarization_from_observable(observable_J(psi), particle)


def density_coefficients(psi: TwoParticleMV) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Pauli expansion ``(a, b, c)`` of the density matrix of a normalized state,

    rho = (1x1 + a_k s_k x 1 + b_k 1 x s_k + c_jk s_j x s_k) / 4.
    """
    require_normalized(psi)
    obs_j = observable_J(psi)
    a = polarization_from_observable(obs_j, 1)
    b = polarization_from_observable(obs_j, 2)
    return a, b, correlations_from_observable(observable_E(psi))


def overlap_from_observables(
    e_psi: TwoParticleMV, j_psi: TwoParticleMV, e_phi: TwoParticleMV, j_phi: TwoParticleMV
) -> float:
    return (e_psi * e_phi).scalar_part() - (j_psi * j_phi).scalar_part()


def overlap_probability(psi: TwoParticleMV, phi: TwoParticleMV) -> float:
    """``|<psi|phi>|^2 = <(psi E psi~)(phi E phi~)> - <(psi J psi~)(phi J phi~)>``."""
    require_normalized(psi)
    require_normalized(phi)
    return overlap_from_observables(
        observable_E(psi), observable_J(psi), observable_E(phi), observable_J(phi)
    )


def mix(
    weights: Iterable[float], states: Iterable[TwoParticleMV]
) -> tuple[TwoParticleMV, TwoParticleMV]:
    """Weighted sums of ``(psi E psi~, psi J psi~)`` describing a mixed state."""
    obs_e, obs_j = TwoParticleMV(), TwoParticleMV()
    for w, psi in zip(weights, states):
        obs_e = obs_e + w * observable_E(psi)
        obs_j = obs_j + w * observable_J(psi)
    return obs_e, obs_j


def singlet() -> TwoParticleMV:
    """``(Is2^1 - Is2^2) E / sqrt(2)``, i.e. ``(|01> - |10>)/sqrt(2)``."""
    return (ISIGMA1[1] - ISIGMA2[1]) * E * (1.0 / math.sqrt(2.0))


def assemble_rotor_form(
    rho: float, chi: float, alpha: float, r: Spinor1, s: Spinor1
) -> TwoParticleMV:
    """``rho^1/2 R^1 S^2 (cos(alpha/2) + sin(alpha/2) Is2^1 Is2^2) exp(J chi) E``."""
    ent = math.cos(alpha / 2) * ONE + math.sin(alpha / 2) * (ISIGMA1[1] * ISIGMA2[1])
    psi = embed(r, 1) * embed(s, 2) * ent * E
    return apply_phase(psi, chi) * math.sqrt(rho)


def apply_local(psi: TwoParticleMV, r: Spinor1, s: Spinor1) -> TwoParticleMV:
    """Local transformation ``R^1 S^2 psi`` (a unitary on each particle when R, S are rotors)."""
    return embed(r, 1) * embed(s, 2) * psi
