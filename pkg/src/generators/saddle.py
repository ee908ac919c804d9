"""Saddle-point matrices and the preconditioners built from them."""

import logging
from typing import Union

import numpy as np
import numpy.typing as npt

from ..kernel.errors import NotPositiveDefiniteError, ParameterError
from ..kernel.ldlt import ldlt_inertia
from ..kernel.solve import solve_linear
from ..models.matrix import DenseMatrix, SymmetricMatrix
from ..models.saddle import SaddlePointSystem

logger = logging.getLogger(__name__)

BlockLike = Union[DenseMatrix, npt.ArrayLike]


def _assemble(h: SymmetricMatrix, b: DenseMatrix) -> SymmetricMatrix:
    m, n = h.dim, b.rows
    k = np.zeros((m + n, m + n))
    k[:m, :m] = h.data
    k[m:, :m] = b.data
    k[:m, m:] = b.data.T
    return SymmetricMatrix(k)


def saddle_point(h: SymmetricMatrix, b: BlockLike) -> SaddlePointSystem:
    """Assemble K = [[H, Bᵀ], [B, 0]] and verify the block congruence when H is invertible.

    With S = -B·H⁻¹·Bᵀ and L = [[I, 0], [B·H⁻¹, I]], K = L·diag(H, S)·Lᵀ, so
    inertia(K) = inertia(H) + inertia(S) by Sylvester's law.

    Args:
        h: Symmetric m×m block
        b: n×m constraint block, n <= m

    Returns:
        SaddlePointSystem; the Schur complement fields are None when H is singular

    Raises:
        ParameterError: If the block shapes do not conform
    """
    block = b if isinstance(b, DenseMatrix) else DenseMatrix(b)
    m, n = h.dim, block.rows
    if block.cols != m:
        raise ParameterError(f"B must have {m} columns to match H, got {block.cols}")
    if n > m:
        raise ParameterError(f"B must have at most {m} rows, got {n}")

    assembled = _assemble(h, block)
    _, inertia_h = ldlt_inertia(h)
    if not inertia_h.is_invertible:
        logger.debug(f"H is singular (inertia {inertia_h}); skipping the Schur complement")
        return SaddlePointSystem(h=h, b=block, assembled=assembled)

    h_inv_bt = solve_linear(h, block.data.T)
    schur = SymmetricMatrix.from_array(-(block.data @ h_inv_bt), symmetrize=True)

    lower = np.eye(m + n)
    lower[m:, :m] = h_inv_bt.T
    middle = np.zeros((m + n, m + n))
    middle[:m, :m] = h.data
    middle[m:, m:] = schur.data
    residual = float(np.max(np.abs(lower @ middle @ lower.T - assembled.data)))

    _, inertia_s = ldlt_inertia(schur)
    _, inertia_k = ldlt_inertia(assembled)
    congruence = inertia_k == inertia_h + inertia_s
    if not congruence:
        logger.warning(f"Saddle-point inertia {inertia_k} != {inertia_h} + {inertia_s}")

    return SaddlePointSystem(
        h=h,
        b=block,
        assembled=assembled,
        schur_complement=schur,
        factorization_residual=residual,
        congruence_holds=congruence,
    )


def constraint_preconditioner(w: SymmetricMatrix, b: BlockLike) -> SaddlePointSystem:
    """[[W, Bᵀ], [B, 0]]: keeps the constraint block of the system and replaces H by W."""
    return saddle_point(w, b)


def block_diag_preconditioner(h: SymmetricMatrix, s_approx: SymmetricMatrix) -> SymmetricMatrix:
    """SPD block-diagonal preconditioner diag(H, S_approx).

    Raises:
        NotPositiveDefiniteError: If either block is not SPD
    """
    for name, block in (("H", h), ("Sapprox", s_approx)):
        _, inertia = ldlt_inertia(block)
        if not inertia.is_positive_definite:
            raise NotPositiveDefiniteError(inertia, name=name)

    m, n = h.dim, s_approx.dim
    d = np.zeros((m + n, m + n))
    d[:m, :m] = h.data
    d[m:, m:] = s_approx.data
    return SymmetricMatrix(d)
