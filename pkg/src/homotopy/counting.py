"""Counts of real pencil eigenvalues against the eigenvalue-avoidance formulas."""

import logging
from typing import Optional

from ..models.homotopy import CountReport
from ..models.matrix import SymmetricMatrix
from ..models.pencil import PencilClassification
from ..pencil.spectrum import DEFAULT_REAL_TOLERANCE, check_same_dim, pencil_spectrum, require_invertible

logger = logging.getLogger(__name__)


def _excess_pairs(count: int, minimum: int) -> Optional[int]:
    """Solve count = minimum + 2·k for an integer k >= 0, or None."""
    excess = count - minimum
    if excess < 0 or excess % 2 != 0:
        return None
    return excess // 2


def count_report(
    a: SymmetricMatrix,
    m: SymmetricMatrix,
    classification: Optional[PencilClassification] = None,
    real_tolerance: float = DEFAULT_REAL_TOLERANCE,
    zero_tolerance: Optional[float] = None,
) -> CountReport:
    """Check negReal = |r| + 2s and posReal = |p + r - n| + 2t for the pair (A, M).

    With inertia(A) = (p, 0, n) and inertia(M) = (p + r, 0, n - r), the Proposition
    flag requires s to exist and satisfy s <= ⌊(p+n-r)/2⌋; the Corollary flag requires
    t to exist and satisfy t <= min(⌊(2p+r)/2⌋, ⌊(2n-r)/2⌋). Both also require
    negReal + posReal <= p + n.

    Args:
        a: Symmetric invertible A
        m: Symmetric invertible M
        classification: Precomputed pencil classification (computed if omitted)
        real_tolerance: Classification tolerance when computing it here
        zero_tolerance: Inertia zero tolerance

    Returns:
        CountReport

    Raises:
        SingularMatrixError: If A or M is singular
    """
    check_same_dim(a, m)
    inertia_a = require_invertible(a, "A", zero_tolerance)
    inertia_m = require_invertible(m, "M", zero_tolerance)
    if classification is None:
        classification = pencil_spectrum(a, m, real_tolerance, zero_tolerance)

    p, n = inertia_a.pos, inertia_a.neg
    r = inertia_m.pos - p
    neg_real = classification.negative_count
    pos_real = classification.positive_count

    s = _excess_pairs(neg_real, abs(r))
    t = _excess_pairs(pos_real, abs(p + r - n))
    within_dim = neg_real + pos_real <= p + n

    proposition = s is not None and s <= (p + n - r) // 2 and within_dim
    corollary = t is not None and t <= min((2 * p + r) // 2, (2 * n - r) // 2) and within_dim

    if not (proposition and corollary):
        logger.warning(
            f"Count identities failed: p={p}, n={n}, r={r}, negReal={neg_real}, posReal={pos_real}, s={s}, t={t}"
        )

    return CountReport(
        p=p,
        n=n,
        r=r,
        neg_real_count=neg_real,
        pos_real_count=pos_real,
        s=s,
        t=t,
        proposition_holds=proposition,
        corollary_holds=corollary,
    )
