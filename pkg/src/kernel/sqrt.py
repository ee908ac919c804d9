"""Principal square root of a symmetric positive definite matrix."""

import logging

import numpy as np

from ..models.matrix import SymmetricMatrix
from .errors import NotPositiveDefiniteError
from .jacobi import sym_eigen
from .ldlt import ldlt_inertia

logger = logging.getLogger(__name__)


def spd_sqrt(matrix: SymmetricMatrix) -> SymmetricMatrix:
    """S = Q·Λ^½·Qᵀ with positive square roots, so that S·S = M.

    Raises:
        NotPositiveDefiniteError: If ldlt_inertia does not report (dim, 0, 0)
    """
    _, inertia = ldlt_inertia(matrix)
    if not inertia.is_positive_definite:
        raise NotPositiveDefiniteError(inertia)

    decomposition = sym_eigen(matrix)
    q = decomposition.eigenvectors
    roots = np.sqrt(np.clip(decomposition.eigenvalues, 0.0, None))
    root = (q * roots) @ q.T
    return SymmetricMatrix(0.5 * (root + root.T))
