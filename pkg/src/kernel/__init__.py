"""Self-contained dense linear algebra kernel."""

from .charpoly import charpoly_eigen_oracle
from .errors import ConvergenceError, KernelError, NotPositiveDefiniteError, ParameterError, SingularMatrixError
from .hqr import general_eigen
from .jacobi import sym_eigen
from .ldlt import ldlt_factor, ldlt_inertia, ldlt_solve, negative_count
from .solve import solve_linear
from .sqrt import spd_sqrt

__all__ = [
    "sym_eigen",
    "ldlt_factor",
    "ldlt_inertia",
    "ldlt_solve",
    "negative_count",
    "general_eigen",
    "charpoly_eigen_oracle",
    "solve_linear",
    "spd_sqrt",
    "KernelError",
    "ConvergenceError",
    "SingularMatrixError",
    "NotPositiveDefiniteError",
    "ParameterError",
]
