"""Dense linear solves: LDLᵀ for symmetric matrices, pivoted elimination otherwise."""

import logging
from typing import Optional, Union

import numpy as np
import numpy.typing as npt

from ..models.matrix import DenseMatrix, SymmetricMatrix
from .errors import ParameterError, SingularMatrixError
from .ldlt import ldlt_factor, ldlt_solve

logger = logging.getLogger(__name__)

# Relative pivot threshold for the nonsymmetric path
PIVOT_TOLERANCE = 1e-14


def _pivoted_elimination(g: npt.NDArray[np.float64], rhs: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
    """Gaussian elimination with partial (row) pivoting on a copy; rhs may be a block."""
    a = np.array(g, dtype=np.float64)
    x = np.array(rhs, dtype=np.float64)
    n = a.shape[0]
    threshold = PIVOT_TOLERANCE * n * max(float(np.max(np.abs(a))), np.finfo(np.float64).tiny)

    for k in range(n):
        pivot_row = k + int(np.argmax(np.abs(a[k:, k])))
        if abs(a[pivot_row, k]) <= threshold:
            raise SingularMatrixError("matrix is singular within tolerance", pivot_index=k)
        if pivot_row != k:
            a[[k, pivot_row], :] = a[[pivot_row, k], :]
            x[[k, pivot_row]] = x[[pivot_row, k]]
        multipliers = a[k + 1 :, k] / a[k, k]
        a[k + 1 :, k:] -= np.outer(multipliers, a[k, k:])
        x[k + 1 :] -= np.outer(multipliers, x[k]).reshape(x[k + 1 :].shape)

    for k in range(n - 1, -1, -1):
        x[k] = (x[k] - a[k, k + 1 :] @ x[k + 1 :]) / a[k, k]
    return x


def solve_linear(
    matrix: Union[SymmetricMatrix, DenseMatrix],
    rhs: npt.ArrayLike,
    zero_tolerance: Optional[float] = None,
) -> npt.NDArray[np.float64]:
    """Solve M·x = rhs for a vector (or an n×k block of right-hand sides).

    Symmetric input goes through the Bunch-Kaufman factors; anything else through
    partially pivoted elimination.

    Raises:
        SingularMatrixError: Naming the pivot index where elimination broke down
        ParameterError: If the shapes do not conform
    """
    b = np.asarray(rhs, dtype=np.float64)

    if isinstance(matrix, SymmetricMatrix):
        if b.shape[0] != matrix.dim:
            raise ParameterError(f"right-hand side has {b.shape[0]} rows, expected {matrix.dim}")
        return ldlt_solve(ldlt_factor(matrix, zero_tolerance), b)

    if not matrix.is_square:
        raise ParameterError(f"cannot solve with a {matrix.rows}x{matrix.cols} matrix")
    if b.shape[0] != matrix.rows:
        raise ParameterError(f"right-hand side has {b.shape[0]} rows, expected {matrix.rows}")
    return _pivoted_elimination(matrix.data, b)

