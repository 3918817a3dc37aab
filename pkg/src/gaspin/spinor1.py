"""Single-particle spinors as even multivectors of the 3D algebra.

A spinor ``psi = a0 + a1 Is1 + a2 Is2 + a3 Is3`` stands for the complex
2-vector ``(a0 + i a3, -a2 + i a1)``.  The unit imaginary acts by
right-multiplication with ``Is3`` and the Pauli operators act as
``psi -> s_k psi s3``.  Complex numbers only appear at the boundary
(``from_complex``/``to_complex`` and ``inner_product``).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from gaspin import ga3
from gaspin.errors import DomainError
from gaspin.ga3 import Multivector3


@dataclass(frozen=True)
class Spinor1:
    a0: float = 0.0
    a1: float = 0.0
    a2: float = 0.0
    a3: float = 0.0

    @classmethod
    def from_multivector(cls, m: Multivector3, atol: float = 1e-12) -> Spinor1:
        """Read the even part of ``m``; odd components must vanish within ``atol``."""
        c = m.coefficients
        if np.max(np.abs(c[[1, 2, 3, 7]])) > atol:
            raise ValueError("multivector has odd-grade components")
        return cls(float(c[0]), float(c[4]), float(c[5]), float(c[6]))

    @property
    def mv(self) -> Multivector3:
        return Multivector3([self.a0, 0.0, 0.0, 0.0, self.a1, self.a2, self.a3, 0.0])

    def as_array(self) -> np.ndarray:
        return np.array([self.a0, self.a1, self.a2, self.a3])

    def __add__(self, other: Spinor1) -> Spinor1:
        return Spinor1(*(self.as_array() + other.as_array()))

    def __sub__(self, other: Spinor1) -> Spinor1:
        return Spinor1(*(self.as_array() - other.as_array()))

    def __mul__(self, k: float) -> Spinor1:
        return Spinor1(*(self.as_array() * float(k)))

    __rmul__ = __mul__


def from_complex(c0: complex, c1: complex) -> Spinor1:
    c0, c1 = complex(c0), complex(c1)
    return Spinor1(c0.real, c1.imag, -c1.real, c0.imag)


def to_complex(psi: Spinor1) -> tuple[complex, complex]:
    return complex(psi.a0, psi.a3), complex(-psi.a2, psi.a1)


def apply_pauli(k: int, psi: Spinor1) -> Spinor1:
    """Action of the k-th Pauli operator: ``s_k psi s3``."""
    if k not in (1, 2, 3):
        raise ValueError(f"Pauli axis must be 1, 2 or 3, got {k!r}")
    return Spinor1.from_multivector(ga3.SIGMA[k - 1] * psi.mv * ga3.S3)


def apply_i(psi: Spinor1) -> Spinor1:
    """Multiplication by the unit imaginary: ``psi Is3``."""
    return Spinor1.from_multivector(psi.mv * ga3.IS3)


def inner_product(psi: Spinor1, phi: Spinor1) -> complex:
    """``<psi|phi>`` as ``<phi psi~> - <phi Is3 psi~> i``."""
    rev = ~psi.mv
    re = (phi.mv * rev).scalar_part()
    im = -(phi.mv * ga3.IS3 * rev).scalar_part()
    return complex(re, im)


def probability_density(psi: Spinor1) -> float:
    """``<psi psi~>``, the squared norm of the state."""
    return (psi.mv * ~psi.mv).scalar_part()


def polarization_bivector(psi: Spinor1) -> Multivector3:
    """Unit bivector ``<psi Is3 psi~>_2 / rho`` giving the spin direction."""
    rho = probability_density(psi)
    if rho == 0.0:
        raise DomainError("polarization of the zero spinor is undefined")
    m = psi.mv
    return ga3.grade_project(m * ga3.IS3 * ~m, 2) / rho


def polarization_vector(psi: Spinor1) -> np.ndarray:
    """Components ``P_k = -Is_k . P`` of the polarization bivector."""
    p = polarization_bivector(psi)
    return np.array([-ga3.bivector_dot(b, p) for b in ga3.I_SIGMA])


def spinor_theta_phi(theta: float, phi: float) -> Spinor1:
    """Rotor ``exp(-phi Is3/2) exp(-theta Is2/2)`` for the Bloch angles (theta, phi)."""
    r = ga3.exp_bivector(ga3.IS3 * (-phi / 2)) * ga3.exp_bivector(ga3.IS2 * (-theta / 2))
    return Spinor1.from_multivector(r)


def orthogonal_spinor(psi: Spinor1) -> Spinor1:
    """The state orthogonal to ``psi``, ``psi Is2``."""
    if probability_density(psi) == 0.0:
        raise DomainError("zero spinor has no orthogonal state")
    return Spinor1.from_multivector(psi.mv * ga3.IS2)


def bloch_angles(psi: Spinor1) -> tuple[float, float]:
    """Bloch angles (theta, phi) of ``psi``; phi is reported as 0 at either pole.

    theta lies in [0, pi] and phi in (-pi, pi].
    """
    c0, c1 = to_complex(psi)
    r0, r1 = abs(c0), abs(c1)
    if r0 == 0.0 and r1 == 0.0:
        raise DomainError("zero spinor has no Bloch angles")
    theta = 2.0 * math.atan2(r1, r0)
    if r0 == 0.0 or r1 == 0.0:
        return theta, 0.0
    phi = cmath.phase(c1 * c0.conjugate())
    if phi == -math.pi:
        phi = math.pi
    return theta, phi
