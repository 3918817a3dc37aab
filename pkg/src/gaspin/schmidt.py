"""Schmidt decomposition of two-qubit pure states.

The default route diagonalizes the Hermitian 2x2 matrix ``C C^dagger`` of
the amplitude matrix ``C[i, j] = c_ij`` in closed form and reads off the
parametrization

    psi = rho^1/2 e^{i chi} ( cos(alpha/2) e^{ i tau/2} s(t1,p1) x s(t2,p2)
                            + sin(alpha/2) e^{-i tau/2} s'(t1,p1) x s'(t2,p2) )

with ``s(t,p) = (cos(t/2) e^{-ip/2}, sin(t/2) e^{ip/2})`` and its orthogonal
partner ``s'(t,p) = (sin(t/2) e^{-ip/2}, -cos(t/2) e^{ip/2})``.

``decompose_iterative`` is an independent route: alternating maximization
of ``|<u, v|psi>|`` over unit spinors followed by the residual step.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from gaspin import ga3, msta2, spinor1
from gaspin.errors import ConvergenceError, DomainError
from gaspin.spinor1 import Spinor1

DEGENERACY_TOL = 1e-9


@dataclass(frozen=True)
class SchmidtForm:
    rho: float
    chi: float
    alpha: float
    tau: float
    theta1: float
    phi1: float
    theta2: float
    phi2: float

    @property
    def m1(self) -> float:
        return math.sqrt(self.rho) * math.cos(self.alpha / 2)

    @property
    def m2(self) -> float:
        return math.sqrt(self.rho) * math.sin(self.alpha / 2)

    def terms(self) -> SchmidtTerms:
        """The same decomposition as explicit Schmidt terms (phases absorbed into u1, u2)."""
        s1 = _bloch_ket(self.theta1, self.phi1)
        s2 = _bloch_ket(self.theta2, self.phi2)
        u1 = cmath.exp(1j * (self.chi + self.tau / 2)) * s1
        u2 = cmath.exp(1j * (self.chi - self.tau / 2)) * _orth_ket(self.theta1, self.phi1)
        return _make_terms(self.m1, self.m2, u1, u2, s2, _orth_ket(self.theta2, self.phi2))


@dataclass(frozen=True)
class SchmidtTerms:
    """``psi = M1 |u1, v1> + M2 |u2, v2>`` with orthonormal pairs."""

    m1: float
    m2: float
    u1: Spinor1
    u2: Spinor1
    v1: Spinor1
    v2: Spinor1
    iterations: int = 0

    def amplitudes(self) -> np.ndarray:
        out = np.zeros(4, dtype=complex)
        for m, u, v in ((self.m1, self.u1, self.v1), (self.m2, self.u2, self.v2)):
            out += m * np.kron(spinor1.to_complex(u), spinor1.to_complex(v))
        return out


def _bloch_ket(theta: float, phi: float) -> np.ndarray:
    return np.array(
        [math.cos(theta / 2) * cmath.exp(-0.5j * phi), math.sin(theta / 2) * cmath.exp(0.5j * phi)]
    )


def _orth_ket(theta: float, phi: float) -> np.ndarray:
    return np.array(
        [math.sin(theta / 2) * cmath.exp(-0.5j * phi), -math.cos(theta / 2) * cmath.exp(0.5j * phi)]
    )


def _ket_angles(u: np.ndarray) -> tuple[float, float]:
    return spinor1.bloch_angles(spinor1.from_complex(u[0], u[1]))


def _wrap(angle: float) -> float:
    """Map to (-pi, pi]."""
    w = math.remainder(angle, 2 * math.pi)
    return math.pi if w == -math.pi else w


def _perp(u: np.ndarray) -> np.ndarray:
    return np.array([-np.conj(u[1]), np.conj(u[0])])


def _gauge_fix(u: np.ndarray, v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Make the largest-magnitude component of ``u`` real positive, compensating in ``v``."""
    z = u[np.argmax(np.abs(u))]
    ph = z / abs(z)
    return u / ph, v * ph


def _make_terms(m1, m2, u1, u2, v1, v2, iterations: int = 0) -> SchmidtTerms:
    u1, v1 = _gauge_fix(u1, v1)
    u2, v2 = _gauge_fix(u2, v2)
    sp = [spinor1.from_complex(*x) for x in (u1, u2, v1, v2)]
    return SchmidtTerms(float(m1), float(m2), *sp, iterations=iterations)


def _coefficients(c00, c01, c10, c11) -> np.ndarray:
    c = np.array([[c00, c01], [c10, c11]], dtype=complex)
    if not np.all(np.isfinite(c)):
        raise DomainError("amplitudes must be finite")
    if not np.any(c):
        raise DomainError("the zero state has no Schmidt decomposition")
    return c


def _dominant_left_vector(c: np.ndarray) -> tuple[float, np.ndarray]:
    """Largest eigenvalue and eigenvector of the Hermitian matrix ``C C^dagger``."""
    g = c @ c.conj().T
    a, d, b = g[0, 0].real, g[1, 1].real, g[0, 1]
    lam = (a + d) / 2 + math.hypot((a - d) / 2, abs(b))
    if b == 0:
        u = np.array([1.0, 0.0], dtype=complex) if a >= d else np.array([0.0, 1.0], dtype=complex)
    elif a >= d:
        u = np.array([lam - d, np.conj(b)], dtype=complex)
    else:
        u = np.array([b, lam - a], dtype=complex)
    return lam, u / np.linalg.norm(u)


def decompose(c00: complex, c01: complex, c10: complex, c11: complex) -> SchmidtForm:
    """Schmidt parameters of ``sum c_ij |i, j>``.

    With (near) equal Schmidt coefficients, ``|M1 - M2| < 1e-9``, the basis
    is not unique; the first particle's basis is then pinned to |0>, |1>.
    """
    c = _coefficients(c00, c01, c10, c11)
    rho = float(np.sum(np.abs(c) ** 2))
    lam, u1 = _dominant_left_vector(c)
    m1 = math.sqrt(lam)
    m2 = abs(c[0, 0] * c[1, 1] - c[0, 1] * c[1, 0]) / m1
    if m1 - m2 < DEGENERACY_TOL:
        u1 = np.array([1.0, 0.0], dtype=complex)
    w = u1.conj() @ c
    v1 = w / np.linalg.norm(w)
    theta1, phi1 = _ket_angles(u1)
    theta2, phi2 = _ket_angles(v1)
    psi = c.reshape(4)
    first = np.vdot(np.kron(_bloch_ket(theta1, phi1), _bloch_ket(theta2, phi2)), psi)
    second = np.vdot(np.kron(_orth_ket(theta1, phi1), _orth_ket(theta2, phi2)), psi)
    gamma = cmath.phase(first)
    if m2 > 1e-15 * m1:
        tau = _wrap(gamma - cmath.phase(second))
    else:
        tau = 0.0
    return SchmidtForm(
        rho=rho,
        chi=_wrap(gamma - tau / 2),
        alpha=2.0 * math.atan2(m2, m1),
        tau=tau,
        theta1=theta1,
        phi1=phi1,
        theta2=theta2,
        phi2=phi2,
    )


def reconstruct(f: SchmidtForm) -> np.ndarray:
    """Amplitudes ``(c00, c01, c10, c11)`` of a Schmidt form."""
    first = np.kron(_bloch_ket(f.theta1, f.phi1), _bloch_ket(f.theta2, f.phi2))
    second = np.kron(_orth_ket(f.theta1, f.phi1), _orth_ket(f.theta2, f.phi2))
    return (
        math.sqrt(f.rho)
        * cmath.exp(1j * f.chi)
        * (
            math.cos(f.alpha / 2) * cmath.exp(0.5j * f.tau) * first
            + math.sin(f.alpha / 2) * cmath.exp(-0.5j * f.tau) * second
        )
    )


def to_rotor_form(f: SchmidtForm) -> tuple[float, float, float, Spinor1, Spinor1]:
    """``(rho, chi, alpha, R, S)`` with ``R = psi(theta1, phi1) exp(Is3 tau/4)`` and likewise S."""
    twist = ga3.exp_bivector(ga3.IS3 * (f.tau / 4))
    r = Spinor1.from_multivector(spinor1.spinor_theta_phi(f.theta1, f.phi1).mv * twist)
    s = Spinor1.from_multivector(spinor1.spinor_theta_phi(f.theta2, f.phi2).mv * twist)
    return f.rho, f.chi, f.alpha, r, s


def assemble(f: SchmidtForm) -> msta2.TwoParticleMV:
    """The multivector state of a Schmidt form, built from its rotor form."""
    return msta2.assemble_rotor_form(*to_rotor_form(f))


def entanglement_angle(c00: complex, c01: complex, c10: complex, c11: complex) -> float:
    """``alpha`` in [0, pi/2]: 0 for product states, pi/2 for maximal entanglement."""
    return decompose(c00, c01, c10, c11).alpha


def decompose_iterative(
    c00: complex,
    c01: complex,
    c10: complex,
    c11: complex,
    tol: float = 1e-12,
    max_iter: int = 200,
) -> SchmidtTerms:
    """Schmidt terms by maximizing ``|M| = |<u, v|psi>|`` over unit spinors.

    For fixed ``u`` the best ``v`` is the normalized contraction ``<u|psi>``
    and vice versa; alternating the two is power iteration on ``C C^dagger``.
    Iteration stops once the stationarity conditions ``<u', v|psi> = 0``
    and ``<u, v'|psi> = 0`` (``u'``, ``v'`` the orthogonal states) hold to
    ``tol * |psi|``.  The second pair spans the remaining orthogonal
    directions and its coefficient is read from the residual
    ``psi - M1 |u1, v1>``.
    """
    if tol <= 0 or max_iter < 1:
        raise ValueError("tol must be positive and max_iter at least 1")
    c = _coefficients(c00, c01, c10, c11)
    scale = math.sqrt(float(np.sum(np.abs(c) ** 2)))
    rows = np.linalg.norm(c, axis=1)
    u = np.eye(2, dtype=complex)[int(np.argmax(rows))]
    converged = False
    for it in range(1, max_iter + 1):
        w = u.conj() @ c
        v = w / np.linalg.norm(w)
        z = c @ v.conj()
        u = z / np.linalg.norm(z)
        # u is now optimal for v, so <u, v'|psi> is the remaining condition.
        v_perp = _perp(v)
        residual = abs(u.conj() @ c @ v_perp.conj())
        if residual <= tol * scale:
            converged = True
            break
    m1 = abs(u.conj() @ c @ v.conj())
    m2_sq = max(scale**2 - m1**2, 0.0)
    degenerate = m1**2 - m2_sq < DEGENERACY_TOL * scale**2
    if not converged and not degenerate:
        raise ConvergenceError(f"no convergence in {max_iter} iterations (residual {residual:.3g})")
    if degenerate:
        # Every unit u is a maximizer; pin the first basis to |0>.
        u = np.array([1.0, 0.0], dtype=complex)
        w = u.conj() @ c
        v = w / np.linalg.norm(w)
    z1 = u.conj() @ c @ v.conj()
    m1 = abs(z1)
    v = v * (z1 / m1)  # phase of M1 absorbed into v
    residual_state = c - m1 * np.outer(u, v)
    u2, v2 = _perp(u), _perp(v)
    z2 = u2.conj() @ residual_state @ v2.conj()
    m2 = abs(z2)
    if m2 > 0:
        v2 = v2 * (z2 / m2)
    if m2 > m1:
        m1, m2, u, u2, v, v2 = m2, m1, u2, u, v2, v
    return _make_terms(m1, m2, u, u2, v, v2, iterations=it)
