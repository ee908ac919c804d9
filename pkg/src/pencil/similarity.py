"""Reality of the pencil spectrum when M (or A) is definite."""

import logging
from typing import Optional

import numpy as np

from ..kernel.jacobi import sym_eigen
from ..kernel.solve import solve_linear
from ..kernel.sqrt import spd_sqrt
from ..models.matrix import SymmetricMatrix
from ..models.pencil import DefiniteRealityCheck, SimilarityCheck
from ..models.spectrum import Inertia
from .spectrum import DEFAULT_REAL_TOLERANCE, check_same_dim, pencil_spectrum, require_invertible

logger = logging.getLogger(__name__)

# Max-abs asymmetry of M^{-1/2}·A·M^{-1/2}, relative to 1 + max|entry|
SYMMETRY_TOLERANCE = 1e-9


def spd_similarity_check(
    a: SymmetricMatrix,
    m: SymmetricMatrix,
    real_tolerance: float = DEFAULT_REAL_TOLERANCE,
) -> SimilarityCheck:
    """Form C = M^{-1/2}·A·M^{-1/2} and check what the SPD similarity promises.

    M⁻¹A = M^{-1/2}·C·M^{1/2} is similar to the symmetric C, so its spectrum is real,
    and C is congruent to A, so their inertias agree.

    Args:
        a: Symmetric invertible A
        m: Symmetric positive definite M
        real_tolerance: Classification tolerance for the pencil spectrum

    Returns:
        SimilarityCheck with the congruent matrix, its eigenvalues and all verdicts

    Raises:
        NotPositiveDefiniteError: If M is not SPD
        SingularMatrixError: If A is singular
    """
    check_same_dim(a, m)
    root = spd_sqrt(m)
    inertia_a = require_invertible(a, "A")

    # S⁻¹A, then S⁻¹(S⁻¹A)ᵀ = S⁻¹·A·S⁻¹ since A and S are symmetric
    left = solve_linear(root, a.data)
    raw = solve_linear(root, left.T)

    asymmetry = float(np.max(np.abs(raw - raw.T)))
    congruent_symmetric = asymmetry <= SYMMETRY_TOLERANCE * (1.0 + float(np.max(np.abs(raw))))
    congruent = SymmetricMatrix.from_array(raw, symmetrize=True)

    eigenvalues = sym_eigen(congruent).eigenvalues
    inertia_congruent = Inertia.from_values(eigenvalues, congruent.default_zero_tolerance())
    pencil = pencil_spectrum(a, m, real_tolerance)

    check = SimilarityCheck(
        congruent=congruent,
        congruent_eigenvalues=eigenvalues,
        inertia_a=inertia_a,
        inertia_congruent=inertia_congruent,
        pencil=pencil,
        congruent_symmetric=congruent_symmetric,
        spectrum_real=pencil.is_real,
        inertia_preserved=inertia_congruent == inertia_a,
        signature_matches=(pencil.positive_count, pencil.negative_count) == (inertia_a.pos, inertia_a.neg),
    )
    logger.debug(f"SPD similarity check (dim={a.dim}): asymmetry={asymmetry:.3e}, all_hold={check.all_hold}")
    return check


def definite_reality_check(
    a: SymmetricMatrix,
    m: SymmetricMatrix,
    real_tolerance: float = DEFAULT_REAL_TOLERANCE,
    zero_tolerance: Optional[float] = None,
) -> DefiniteRealityCheck:
    """Record which of M, A is definite and whether the pencil spectrum came out real.

    Either being definite (of either sign) makes M⁻¹A similar to a symmetric matrix.
    """
    check_same_dim(a, m)
    inertia_a = require_invertible(a, "A", zero_tolerance)
    inertia_m = require_invertible(m, "M", zero_tolerance)

    definite = None
    if inertia_m.is_definite:
        definite = "M"
    elif inertia_a.is_definite:
        definite = "A"

    check = DefiniteRealityCheck(
        definite_matrix=definite,
        pencil=pencil_spectrum(a, m, real_tolerance, zero_tolerance),
    )
    if not check.consistent:
        logger.warning(f"{definite} is definite but the pencil spectrum has complex pairs")
    return check
