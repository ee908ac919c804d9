"""Numerical error hierarchy for the dense kernel and everything built on it."""

from typing import Optional

from ..models.spectrum import Inertia


class KernelError(Exception):
    """Base class for numerical failures (singularity, non-convergence)."""

    pass


class ConvergenceError(KernelError):
    """Raised when an iterative kernel routine hits its iteration cap."""

    def __init__(self, routine: str, iterations: int, matrix_hash: str) -> None:
        self.routine = routine
        self.iterations = iterations
        self.matrix_hash = matrix_hash
        super().__init__(f"{routine} did not converge after {iterations} iterations (matrix {matrix_hash})")


class SingularMatrixError(KernelError):
    """Raised when a matrix that must be invertible is singular within tolerance."""

    def __init__(self, message: str, pivot_index: Optional[int] = None, inertia: Optional[Inertia] = None) -> None:
        self.pivot_index = pivot_index
        self.inertia = inertia
        details = []
        if pivot_index is not None:
            details.append(f"pivot index {pivot_index}")
        if inertia is not None:
            details.append(f"inertia {inertia}")
        suffix = f" ({', '.join(details)})" if details else ""
        super().__init__(f"{message}{suffix}")


class NotPositiveDefiniteError(KernelError):
    """Raised when an SPD argument has a nonpositive eigenvalue."""

    def __init__(self, inertia: Inertia, name: str = "matrix") -> None:
        self.inertia = inertia
        super().__init__(f"{name} is not symmetric positive definite: inertia {inertia}")


class ParameterError(ValueError):
    """Raised for arguments outside their documented range."""

    pass
