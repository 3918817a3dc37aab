"""One- and two-qubit pure states as multivectors: Schmidt decomposition,
observables, reduced states and overlap probabilities, checked against a
plain complex-matrix implementation."""

from gaspin.errors import ConvergenceError, DomainError
from gaspin.ga3 import Multivector3
from gaspin.msta2 import TwoParticleMV
from gaspin.schmidt import SchmidtForm, SchmidtTerms
from gaspin.spinor1 import Spinor1

__all__ = [
    "ConvergenceError",
    "DomainError",
    "Multivector3",
    "SchmidtForm",
    "SchmidtTerms",
    "Spinor1",
    "TwoParticleMV",
]
