"""Symmetric indefinite LDLᵀ factorization with Bunch-Kaufman pivoting.

The factorization works on a full dense copy and applies every interchange
symmetrically, so the trailing block is always the current Schur complement.
Inertia is read off the 1×1 pivots and the eigenvalues of the 2×2 pivots
(Sylvester: P·A·Pᵀ and D are congruent).
"""

import logging
import math
from typing import List, Optional, Tuple

import numpy as np
import numpy.typing as npt

from ..models.matrix import SymmetricMatrix
from ..models.spectrum import Inertia, LdltFactorization, PivotBlock
from .errors import ParameterError, SingularMatrixError

logger = logging.getLogger(__name__)

# Bunch-Kaufman growth constant (1 + sqrt(17)) / 8
ALPHA = (1.0 + math.sqrt(17.0)) / 8.0


def _interchange(a: np.ndarray, lower: np.ndarray, perm: np.ndarray, i: int, j: int, k: int) -> None:
    """Swap rows and columns i, j of the working matrix and rows of the finished part of L."""
    if i == j:
        return
    a[[i, j], :] = a[[j, i], :]
    a[:, [i, j]] = a[:, [j, i]]
    lower[[i, j], :k] = lower[[j, i], :k]
    perm[[i, j]] = perm[[j, i]]


def _inverse_2x2(d: np.ndarray) -> np.ndarray:
    det = d[0, 0] * d[1, 1] - d[0, 1] * d[1, 0]
    return np.array([[d[1, 1], -d[0, 1]], [-d[1, 0], d[0, 0]]]) / det


def _symmetric_2x2_eigenvalues(d: np.ndarray) -> Tuple[float, float]:
    mean = 0.5 * (d[0, 0] + d[1, 1])
    radius = math.hypot(0.5 * (d[0, 0] - d[1, 1]), d[1, 0])
    return (float(mean - radius), float(mean + radius))


def ldlt_factor(matrix: SymmetricMatrix, zero_tolerance: Optional[float] = None) -> LdltFactorization:
    """Factor P·A·Pᵀ = L·D·Lᵀ.

    Always completes: an exactly zero pivot column is recorded as a zero 1×1 block and
    left for the caller's zero count.

    Args:
        matrix: Symmetric input
        zero_tolerance: |block value| at or below this counts as zero
            (default 1e-12 · dim · max|entry|)
    """
    tol = matrix.default_zero_tolerance() if zero_tolerance is None else float(zero_tolerance)
    if tol < 0.0:
        raise ParameterError(f"zero tolerance must be nonnegative, got {tol}")

    a = matrix.to_array()
    n = matrix.dim
    perm = np.arange(n, dtype=np.int64)
    lower = np.eye(n)
    diagonal = np.zeros((n, n))
    blocks: List[PivotBlock] = []

    k = 0
    while k < n:
        absakk = abs(a[k, k])
        if k + 1 < n:
            column = np.abs(a[k + 1 :, k])
            imax = k + 1 + int(np.argmax(column))
            colmax = float(column[imax - k - 1])
        else:
            imax, colmax = k, 0.0

        size = 1
        if max(absakk, colmax) == 0.0 or absakk >= ALPHA * colmax:
            pass
        else:
            row = np.abs(a[imax, k:])
            row[imax - k] = 0.0
            rowmax = float(np.max(row))
            if absakk * rowmax >= ALPHA * colmax * colmax:
                pass
            elif abs(a[imax, imax]) >= ALPHA * rowmax:
                _interchange(a, lower, perm, k, imax, k)
            else:
                _interchange(a, lower, perm, k + 1, imax, k)
                size = 2

        if size == 1:
            pivot = a[k, k]
            diagonal[k, k] = pivot
            if pivot != 0.0 and k + 1 < n:
                col = a[k + 1 :, k].copy()
                a[k + 1 :, k + 1 :] -= np.outer(col, col) / pivot
                lower[k + 1 :, k] = col / pivot
            blocks.append(PivotBlock(start=k, size=1, values=(float(pivot),)))
        else:
            block = a[k : k + 2, k : k + 2].copy()
            diagonal[k : k + 2, k : k + 2] = block
            if k + 2 < n:
                cols = a[k + 2 :, k : k + 2].copy()
                multipliers = cols @ _inverse_2x2(block)
                update = multipliers @ cols.T
                a[k + 2 :, k + 2 :] -= 0.5 * (update + update.T)
                lower[k + 2 :, k : k + 2] = multipliers
            blocks.append(PivotBlock(start=k, size=2, values=_symmetric_2x2_eigenvalues(block)))

        k += size

    return LdltFactorization(
        permutation=perm,
        blocks=tuple(blocks),
        lower=lower,
        diagonal=diagonal,
        zero_tolerance=tol,
    )


def ldlt_inertia(
    matrix: SymmetricMatrix, zero_tolerance: Optional[float] = None
) -> Tuple[LdltFactorization, Inertia]:
    """Factor and count pivot signs; the inertia of A."""
    factorization = ldlt_factor(matrix, zero_tolerance)
    inertia = factorization.inertia()
    logger.debug(f"ldlt_inertia dim={matrix.dim} blocks={factorization.block_structure} inertia={inertia}")
    return factorization, inertia


def negative_count(matrix: SymmetricMatrix) -> int:
    """Number of strictly negative eigenvalues (exact pivot signs, no zero band)."""
    return ldlt_factor(matrix, zero_tolerance=0.0).inertia().neg


def ldlt_solve(factorization: LdltFactorization, rhs: npt.ArrayLike) -> npt.NDArray[np.float64]:
    """Solve A·x = rhs from the factors; rhs may be a vector or an n×k block.

    Raises:
        SingularMatrixError: If a pivot block is zero within the factorization tolerance
    """
    perm = factorization.permutation
    lower = factorization.lower
    n = factorization.dim

    b = np.asarray(rhs, dtype=np.float64)
    if b.shape[0] != n:
        raise ParameterError(f"right-hand side has {b.shape[0]} rows, expected {n}")
    x = np.array(b[perm], dtype=np.float64)

    for i in range(1, n):
        x[i] -= lower[i, :i] @ x[:i]

    for block in factorization.blocks:
        if any(abs(v) <= factorization.zero_tolerance for v in block.values):
            raise SingularMatrixError("matrix is singular within tolerance", pivot_index=block.start)
        span = slice(block.start, block.stop)
        d = factorization.diagonal[span, span]
        if block.size == 1:
            x[block.start] = x[block.start] / d[0, 0]
        else:
            x[span] = _inverse_2x2(d) @ x[span]

    for i in range(n - 2, -1, -1):
        x[i] -= lower[i + 1 :, i] @ x[i + 1 :]

    result = np.empty_like(x)
    result[perm] = x
    return result
