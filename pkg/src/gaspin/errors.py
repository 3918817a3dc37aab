"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input is well formed but outside the domain of the operation
    (zero state, unnormalized state, state off the correlated subspace)."""


class ConvergenceError(RuntimeError):
    """An iterative routine did not converge within its iteration budget."""
