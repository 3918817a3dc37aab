import cmath
import math

import numpy as np
import pytest

from gaspin import ga3, oracle, spinor1
from gaspin.errors import DomainError
from gaspin.spinor1 import Spinor1
from tests.conftest import random_spinor

ONE = Spinor1(1.0)
DOWN = Spinor1(0.0, 0.0, -1.0, 0.0)  # -Is2


def vec(psi):
    return np.array(spinor1.to_complex(psi))


def test_basis_map():
    assert spinor1.from_complex(1, 0) == ONE
    assert spinor1.from_complex(0, 1) == DOWN
    assert spinor1.to_complex(ONE) == (1, 0)
    assert spinor1.to_complex(DOWN) == (0, 1)


def test_round_trip_exact(rng):
    for _ in range(1000):
        c0, c1 = rng.normal(size=2) + 1j * rng.normal(size=2)
        assert spinor1.to_complex(spinor1.from_complex(c0, c1)) == (c0, c1)
        psi = random_spinor(rng)
        assert spinor1.from_complex(*spinor1.to_complex(psi)) == psi


def test_pauli_examples():
    assert spinor1.apply_pauli(3, ONE) == ONE
    assert spinor1.apply_pauli(1, ONE) == DOWN
    assert np.array_equal(oracle.pauli_matrix(1) @ vec(ONE), vec(DOWN))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_pauli_involution_and_oracle(rng, k):
    for _ in range(300):
        psi = random_spinor(rng)
        twice = spinor1.apply_pauli(k, spinor1.apply_pauli(k, psi))
        assert np.allclose(twice.as_array(), psi.as_array(), atol=1e-13, rtol=0)
        got = vec(spinor1.apply_pauli(k, psi))
        assert np.allclose(got, oracle.pauli_matrix(k) @ vec(psi), atol=1e-12, rtol=0)


@pytest.mark.parametrize("k", [0, 4])
def test_pauli_bad_axis(k):
    with pytest.raises(ValueError):
        spinor1.apply_pauli(k, ONE)


def test_pauli_commutators(rng):
    eps = np.zeros((3, 3, 3))
    for (j, k, l), s in {(0, 1, 2): 1, (1, 2, 0): 1, (2, 0, 1): 1, (0, 2, 1): -1, (2, 1, 0): -1, (1, 0, 2): -1}.items():
        eps[j, k, l] = s
    for _ in range(200):
        psi = random_spinor(rng)
        for j in (1, 2, 3):
            for k in (1, 2, 3):
                comm = spinor1.apply_pauli(j, spinor1.apply_pauli(k, psi)) - spinor1.apply_pauli(
                    k, spinor1.apply_pauli(j, psi)
                )
                expected = sum(
                    2j * eps[j - 1, k - 1, m] * (oracle.pauli_matrix(m + 1) @ vec(psi)) for m in range(3)
                )
                assert np.allclose(vec(comm), expected, atol=1e-12, rtol=0)


def test_apply_i(rng):
    assert spinor1.apply_i(ONE) == Spinor1(0, 0, 0, 1)
    for _ in range(1000):
        psi = random_spinor(rng)
        assert np.allclose(vec(spinor1.apply_i(psi)), 1j * vec(psi), atol=1e-12, rtol=0)
        twice = spinor1.apply_i(spinor1.apply_i(psi))
        assert np.allclose(twice.as_array(), -psi.as_array(), atol=1e-15, rtol=0)
        four = spinor1.apply_i(spinor1.apply_i(twice))
        assert np.allclose(four.as_array(), psi.as_array(), atol=1e-15, rtol=0)


def test_inner_product_examples():
    assert spinor1.inner_product(ONE, ONE) == 1
    assert spinor1.inner_product(ONE, DOWN) == 0
    assert spinor1.inner_product(ONE, spinor1.apply_i(ONE)) == 1j


def test_inner_product_matches_oracle(rng):
    for _ in range(1000):
        psi, phi = random_spinor(rng), random_spinor(rng)
        got = spinor1.inner_product(psi, phi)
        assert abs(got - oracle.inner(vec(psi), vec(phi))) < 1e-12


def test_probability_density(rng):
    assert spinor1.probability_density(ONE) == 1
    assert spinor1.probability_density(Spinor1(2.0)) == 4
    for _ in range(1000):
        psi = random_spinor(rng)
        rho = spinor1.probability_density(psi)
        assert abs(rho - oracle.norm_squared(vec(psi))) < 1e-14 * max(1.0, rho)
        # psi psi~ is a pure scalar
        assert np.max(np.abs((psi.mv * ~psi.mv).coefficients[1:])) < 1e-14


def test_polarization_examples():
    assert spinor1.polarization_bivector(ONE).is_close(ga3.IS3, 0)
    theta, phi = 1.1, -2.3
    p = spinor1.polarization_bivector(spinor1.spinor_theta_phi(theta, phi))
    expected = ga3.Multivector3.bivector(
        math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi), math.cos(theta)
    )
    assert p.is_close(expected, 1e-15)


def test_polarization_matches_oracle(rng):
    for _ in range(1000):
        psi = random_spinor(rng)
        p = spinor1.polarization_bivector(psi)
        assert np.max(np.abs(p.coefficients[[0, 1, 2, 3, 7]])) == 0.0
        assert abs(ga3.bivector_dot(p, p) + 1) < 1e-12
        pv = spinor1.polarization_vector(psi)
        assert np.allclose(pv, oracle.spin_expectations(vec(psi)), atol=1e-12, rtol=0)
        assert abs(np.linalg.norm(pv) - 1) < 1e-12


def test_polarization_phase_invariant(rng):
    for _ in range(500):
        psi = random_spinor(rng)
        scaled = spinor1.apply_i(psi) * rng.uniform(0.1, 10)
        assert spinor1.polarization_bivector(scaled).is_close(spinor1.polarization_bivector(psi), 1e-12)


def test_zero_spinor_errors():
    with pytest.raises(DomainError):
        spinor1.polarization_bivector(Spinor1())
    with pytest.raises(DomainError):
        spinor1.orthogonal_spinor(Spinor1())


def test_spinor_theta_phi_examples():
    assert spinor1.spinor_theta_phi(0, 0) == ONE
    down = spinor1.spinor_theta_phi(math.pi, 0)
    assert np.allclose(down.as_array(), DOWN.as_array(), atol=1e-16, rtol=0)


def test_spinor_theta_phi_grid():
    for theta in np.linspace(0, math.pi, 10):
        for phi in np.linspace(-math.pi, math.pi, 11)[1:]:
            psi = spinor1.spinor_theta_phi(theta, phi)
            expected = (
                math.cos(theta / 2) * cmath.exp(-0.5j * phi),
                math.sin(theta / 2) * cmath.exp(0.5j * phi),
            )
            assert np.allclose(vec(psi), expected, atol=1e-15, rtol=0)
            assert abs(spinor1.probability_density(psi) - 1) < 1e-15


def test_orthogonal_spinor(rng):
    assert spinor1.orthogonal_spinor(ONE) == Spinor1(0, 0, 1, 0)
    theta, phi = 0.7, 2.9
    orth = spinor1.orthogonal_spinor(spinor1.spinor_theta_phi(theta, phi))
    expected = (
        math.sin(theta / 2) * cmath.exp(-0.5j * phi),
        -math.cos(theta / 2) * cmath.exp(0.5j * phi),
    )
    assert np.allclose(vec(orth), expected, atol=1e-15, rtol=0)
    for _ in range(1000):
        psi = random_spinor(rng)
        orth = spinor1.orthogonal_spinor(psi)
        assert abs(spinor1.inner_product(psi, orth)) < 1e-13 * spinor1.probability_density(psi)
        assert math.isclose(spinor1.probability_density(orth), spinor1.probability_density(psi), rel_tol=1e-14)


def test_bloch_angles_round_trip(rng):
    for _ in range(500):
        theta, phi = rng.uniform(0.01, math.pi - 0.01), rng.uniform(-math.pi, math.pi)
        psi = spinor1.apply_i(spinor1.spinor_theta_phi(theta, phi)) * 2.5
        t, p = spinor1.bloch_angles(psi)
        assert abs(t - theta) < 1e-12
        assert abs(cmath.exp(1j * p) - cmath.exp(1j * phi)) < 1e-12


def test_bloch_angles_pole_convention():
    assert spinor1.bloch_angles(ONE) == (0.0, 0.0)
    assert spinor1.bloch_angles(spinor1.apply_i(DOWN)) == (math.pi, 0.0)
