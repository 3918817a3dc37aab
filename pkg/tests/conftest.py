import math

import numpy as np
import pytest

from gaspin import ga3
from gaspin.spinor1 import Spinor1

# (criterion, passed, detail) lines collected by test_acceptance.py
ACCEPTANCE_LINES = []


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


def random_spinor(rng) -> Spinor1:
    return Spinor1(*rng.normal(size=4))


def random_rotor(rng) -> Spinor1:
    v = rng.normal(size=4)
    return Spinor1(*(v / np.linalg.norm(v)))


def random_bivector(rng, scale: float = 3.0) -> ga3.Multivector3:
    return ga3.Multivector3.bivector(*(scale * rng.normal(size=3)))


def random_state(rng, dim: int = 4) -> np.ndarray:
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)


def random_angles(rng):
    """Random Schmidt-form angles (alpha, tau, theta1, phi1, theta2, phi2, chi)."""
    return dict(
        alpha=rng.uniform(0, math.pi / 2),
        tau=rng.uniform(-math.pi, math.pi),
        theta1=rng.uniform(0, math.pi),
        phi1=rng.uniform(-math.pi, math.pi),
        theta2=rng.uniform(0, math.pi),
        phi2=rng.uniform(-math.pi, math.pi),
        chi=rng.uniform(-math.pi, math.pi),
    )


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_LINES:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
