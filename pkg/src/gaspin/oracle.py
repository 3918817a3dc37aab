"""Textbook matrix quantum mechanics for 1 and 2 qubits.

Used only to cross-check the geometric-algebra modules, so it must not
import anything from them.  States are complex numpy vectors of length 2
or 4 in the ordering ``(c00, c01, c10, c11)``; the 2x2 eigen- and
singular-value routines are closed forms.
"""

from __future__ import annotations

import math

import numpy as np

_PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
IDENTITY2 = np.eye(2, dtype=complex)


class OracleError(ValueError):
    pass


def pauli_matrix(k: int) -> np.ndarray:
    if k not in (1, 2, 3):
        raise OracleError(f"Pauli axis must be 1, 2 or 3, got {k!r}")
    return _PAULI[k - 1].copy()


def state(amplitudes) -> np.ndarray:
    v = np.asarray(amplitudes, dtype=complex)
    if v.shape not in ((2,), (4,)):
        raise OracleError(f"state must have 2 or 4 amplitudes, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise OracleError("state has non-finite amplitudes")
    return v


def inner(psi, phi) -> complex:
    psi, phi = state(psi), state(phi)
    if psi.shape != phi.shape:
        raise OracleError("dimension mismatch")
    return complex(np.vdot(psi, phi))


def norm_squared(psi) -> float:
    return inner(psi, psi).real


def kron(a, b) -> np.ndarray:
    return np.kron(a, b)


def density_matrix(psi) -> np.ndarray:
    psi = state(psi)
    return np.outer(psi, psi.conj())


def expectation(rho: np.ndarray, q: np.ndarray) -> complex:
    """``tr(rho Q)``."""
    rho, q = np.asarray(rho), np.asarray(q)
    if rho.ndim != 2 or rho.shape != q.shape or rho.shape[0] != rho.shape[1]:
        raise OracleError(f"dimension mismatch: {rho.shape} vs {q.shape}")
    return complex(np.trace(rho @ q))


def partial_trace(rho: np.ndarray, keep: int) -> np.ndarray:
    """Reduced 2x2 density matrix of particle ``keep`` from a 4x4 one."""
    rho = np.asarray(rho)
    if rho.shape != (4, 4):
        raise OracleError(f"expected a 4x4 density matrix, got {rho.shape}")
    t = rho.reshape(2, 2, 2, 2)  # indices (i, j, k, l) for |i j><k l|
    if keep == 1:
        return np.einsum("ijkj->ik", t)
    if keep == 2:
        return np.einsum("ijil->jl", t)
    raise OracleError(f"keep must be 1 or 2, got {keep!r}")


def bloch_vector(rho2: np.ndarray) -> np.ndarray:
    return np.array([expectation(rho2, p).real for p in _PAULI])


def spin_expectations(psi) -> np.ndarray:
    """``<psi|s_k|psi>/<psi|psi>`` for k = 1, 2, 3."""
    psi = state(psi)
    n = norm_squared(psi)
    return np.array([np.vdot(psi, p @ psi).real / n for p in _PAULI])


def pauli_coefficients(rho: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``a_k = tr(rho s_k x 1)``, ``b_k = tr(rho 1 x s_k)``, ``c_jk = tr(rho s_j x s_k)``."""
    a = np.array([expectation(rho, np.kron(p, IDENTITY2)).real for p in _PAULI])
    b = np.array([expectation(rho, np.kron(IDENTITY2, p)).real for p in _PAULI])
    c = np.array([[expectation(rho, np.kron(p, q)).real for q in _PAULI] for p in _PAULI])
    return a, b, c


def density_from_coefficients(a, b, c) -> np.ndarray:
    rho = np.kron(IDENTITY2, IDENTITY2)
    for k in range(3):
        rho = rho + a[k] * np.kron(_PAULI[k], IDENTITY2) + b[k] * np.kron(IDENTITY2, _PAULI[k])
        for m in range(3):
            rho = rho + c[k][m] * np.kron(_PAULI[k], _PAULI[m])
    return rho / 4


def eigh_2x2(h: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (descending) and eigenvectors (columns) of a Hermitian 2x2 matrix."""
    a, d = h[0, 0].real, h[1, 1].real
    b = h[0, 1]
    mean, half = (a + d) / 2, (a - d) / 2
    rad = math.hypot(half, abs(b))
    lam1, lam2 = mean + rad, mean - rad
    if abs(b) == 0.0:
        v1 = np.array([1, 0], dtype=complex) if a >= d else np.array([0, 1], dtype=complex)
    elif a >= d:
        v1 = np.array([lam1 - d, np.conj(b)], dtype=complex)
    else:
        v1 = np.array([b, lam1 - a], dtype=complex)
    v1 = v1 / np.linalg.norm(v1)
    v2 = np.array([-np.conj(v1[1]), np.conj(v1[0])])
    return np.array([lam1, lam2]), np.column_stack([v1, v2])


def svd_2x2(c: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``C = U diag(M1, M2) V^dagger`` with ``M1 >= M2 >= 0``, via the eigenvectors of ``C^dagger C``."""
    c = np.asarray(c, dtype=complex)
    if c.shape != (2, 2):
        raise OracleError(f"expected a 2x2 matrix, got {c.shape}")
    lam, v = eigh_2x2(c.conj().T @ c)
    m1 = math.sqrt(max(lam[0], 0.0))
    m2 = abs(c[0, 0] * c[1, 1] - c[0, 1] * c[1, 0]) / m1 if m1 > 0 else 0.0
    if m1 == 0.0:
        return np.zeros(2), IDENTITY2.copy(), IDENTITY2.copy()
    u1 = c @ v[:, 0] / m1
    u1 = u1 / np.linalg.norm(u1)
    if m2 > 0.0:
        u2 = c @ v[:, 1] / m2
        u2 = u2 / np.linalg.norm(u2)
    else:
        u2 = np.array([-np.conj(u1[1]), np.conj(u1[0])])
    return np.array([m1, m2]), np.column_stack([u1, u2]), v


def coefficient_matrix(psi) -> np.ndarray:
    psi = state(psi)
    if psi.shape != (4,):
        raise OracleError("expected a 2-qubit state")
    return psi.reshape(2, 2)


def schmidt_coefficients(psi) -> np.ndarray:
    return svd_2x2(coefficient_matrix(psi))[0]


def overlap(psi, phi, tol: float = 1e-10) -> float:
    """``|<psi|phi>|^2`` for normalized states, checked against ``tr(rho_psi rho_phi)``."""
    psi, phi = state(psi), state(phi)
    if psi.shape != phi.shape:
        raise OracleError("dimension mismatch")
    for v in (psi, phi):
        if abs(norm_squared(v) - 1.0) > tol:
            raise OracleError("overlap requires normalized states")
    p = abs(inner(psi, phi)) ** 2
    p_trace = expectation(density_matrix(psi), density_matrix(phi)).real
    if abs(p - p_trace) > 1e-12:
        raise OracleError(f"inconsistent overlap: {p} vs {p_trace}")
    return p


def random_state(rng: np.random.Generator, dim: int = 4) -> np.ndarray:
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)
