import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gaspin import msta2, oracle, schmidt, spinor1
from gaspin.errors import ConvergenceError, DomainError
from tests.conftest import random_angles, random_rotor, random_state

SQ = 1 / math.sqrt(2)


def local_unitary(rotor):
    cols = [spinor1.to_complex(spinor1.Spinor1.from_multivector(rotor.mv * k.mv)) for k in (
        spinor1.Spinor1(1.0), spinor1.Spinor1(0.0, 0.0, -1.0, 0.0))]
    return np.array(cols).T


def test_product_state_example():
    f = schmidt.decompose(1, 0, 0, 0)
    assert f.alpha == 0 and f.tau == 0 and f.chi == 0
    assert (f.theta1, f.phi1, f.theta2, f.phi2) == (0, 0, 0, 0)
    assert f.m1 == 1 and f.m2 == 0


def test_unequal_weights_example():
    a, b = math.sqrt(0.9), math.sqrt(0.1)
    f = schmidt.decompose(a, 0, 0, b)
    assert abs(f.alpha - 2 * math.atan2(b, a)) < 1e-15
    assert abs(f.m1 - a) < 1e-15 and abs(f.m2 - b) < 1e-15
    # second term is |1,1> = s'(0,0) x s'(0,0), so no relative phase
    assert abs(f.tau) < 1e-15 and abs(f.chi) < 1e-15


def test_singlet_tie_break():
    f = schmidt.decompose(0, SQ, -SQ, 0)
    assert abs(f.alpha - math.pi / 2) < 1e-15
    assert f.theta1 == 0 and abs(f.theta2 - math.pi) < 1e-15
    assert np.max(np.abs(schmidt.reconstruct(f) - [0, SQ, -SQ, 0])) < 1e-15


def test_reconstruction_and_oracle(rng):
    for _ in range(2000):
        c = random_state(rng) * rng.uniform(0.2, 5)
        f = schmidt.decompose(*c)
        assert np.max(np.abs(schmidt.reconstruct(f) - c)) < 1e-10 * max(1, np.linalg.norm(c))
        m = oracle.schmidt_coefficients(c)
        assert abs(f.m1 - m[0]) < 1e-11 * max(1, m[0]) and abs(f.m2 - m[1]) < 1e-11 * max(1, m[0])
        assert abs(f.m1**2 + f.m2**2 - f.rho) < 1e-12 * f.rho
        assert 0 <= f.alpha <= math.pi / 2
        for angle in (f.tau, f.chi, f.phi1, f.phi2):
            assert -math.pi < angle <= math.pi
        assert 0 <= f.theta1 <= math.pi and 0 <= f.theta2 <= math.pi


def test_terms_form_orthonormal_pairs(rng):
    for _ in range(500):
        c = random_state(rng)
        t = schmidt.decompose(*c).terms()
        assert np.max(np.abs(t.amplitudes() - c)) < 1e-10
        assert abs(spinor1.inner_product(t.u1, t.u2)) < 1e-13
        assert abs(spinor1.inner_product(t.v1, t.v2)) < 1e-13
        for s in (t.u1, t.u2, t.v1, t.v2):
            assert abs(spinor1.probability_density(s) - 1) < 1e-13


def test_rotor_form_matches_amplitudes(rng):
    for _ in range(1000):
        c = random_state(rng)
        f = schmidt.decompose(*c)
        assert np.max(np.abs(msta2.to_complex4(schmidt.assemble(f)) - c)) < 1e-11


def test_reconstruct_of_random_parameters_decomposes_back(rng):
    for _ in range(500):
        ang = random_angles(rng)
        ang["alpha"] = rng.uniform(0.05, math.pi / 2 - 0.05)
        ang["theta1"] = rng.uniform(0.05, math.pi - 0.05)
        ang["theta2"] = rng.uniform(0.05, math.pi - 0.05)
        f = schmidt.SchmidtForm(rho=1.0, **ang)
        g = schmidt.decompose(*schmidt.reconstruct(f))
        for name in ("alpha", "theta1", "theta2"):
            assert abs(getattr(f, name) - getattr(g, name)) < 1e-9
        for name in ("tau", "chi", "phi1", "phi2"):
            assert abs(cmath.exp(1j * getattr(f, name)) - cmath.exp(1j * getattr(g, name))) < 1e-9


def test_alpha_local_unitary_invariant(rng):
    for _ in range(500):
        c = random_state(rng)
        u, v = local_unitary(random_rotor(rng)), local_unitary(random_rotor(rng))
        moved = np.kron(u, v) @ c
        assert abs(schmidt.entanglement_angle(*moved) - schmidt.entanglement_angle(*c)) < 1e-10


def test_m1_is_maximal_overlap(rng):
    c = random_state(rng)
    f = schmidt.decompose(*c)
    probes = [random_state(rng, 2) for _ in range(20_000)]
    best = max(abs(np.vdot(np.kron(probes[2 * i], probes[2 * i + 1]), c)) for i in range(10_000))
    assert best <= f.m1 + 1e-12
    assert best > 0.9 * f.m1


def test_global_phase_and_scale(rng):
    for _ in range(300):
        c = random_state(rng)
        f = schmidt.decompose(*c)
        g = schmidt.decompose(*(3.0 * cmath.exp(0.7j) * c))
        assert abs(f.alpha - g.alpha) < 1e-10
        assert abs(g.rho - 9.0) < 1e-12


def test_errors():
    with pytest.raises(DomainError):
        schmidt.decompose(0, 0, 0, 0)
    with pytest.raises(DomainError):
        schmidt.decompose(float("nan"), 0, 0, 1)
    with pytest.raises(DomainError):
        schmidt.decompose_iterative(0, 0, 0, 0)
    with pytest.raises(ValueError):
        schmidt.decompose_iterative(1, 0, 0, 0, tol=0)
    with pytest.raises(ValueError):
        schmidt.decompose_iterative(1, 0, 0, 0, max_iter=0)


def test_iterative_agrees_with_closed_form(rng):
    for _ in range(1000):
        c = random_state(rng)
        f = schmidt.decompose(*c)
        t = schmidt.decompose_iterative(*c)
        assert abs(t.m1 - f.m1) < 1e-8 and abs(t.m2 - f.m2) < 1e-8
        assert np.max(np.abs(t.amplitudes() - c)) < 1e-8
        assert t.iterations <= 200


def test_iterative_singlet_tie_break():
    t = schmidt.decompose_iterative(0, SQ, -SQ, 0)
    assert abs(t.m1 - SQ) < 1e-15 and abs(t.m2 - SQ) < 1e-15
    assert spinor1.to_complex(t.u1) == (1, 0)
    assert np.max(np.abs(t.amplitudes() - [0, SQ, -SQ, 0])) < 1e-15


def test_iterative_convergence_error():
    # a barely non-degenerate state cannot converge in two sweeps
    c = np.array([1.0, 0.3, 0.2, 0.95], dtype=complex)
    with pytest.raises(ConvergenceError):
        schmidt.decompose_iterative(*c, max_iter=2, tol=1e-15)


@settings(max_examples=300, deadline=None)
@given(st.lists(st.floats(-1e3, 1e3, allow_nan=False), min_size=8, max_size=8))
def test_decompose_reconstructs_arbitrary_amplitudes(x):
    c = np.array(x[0::2]) + 1j * np.array(x[1::2])
    norm = np.linalg.norm(c)
    if norm < 1e-100:
        return
    f = schmidt.decompose(*c)
    tol = 1e-9 if f.m1 - f.m2 < 1e-6 * norm else 1e-10
    assert np.max(np.abs(schmidt.reconstruct(f) - c)) <= tol * norm
