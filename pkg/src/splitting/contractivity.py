"""Contraction criterion of the splitting A = M - N."""

import logging
from typing import Optional

from ..homotopy.counting import count_report
from ..models.matrix import SymmetricMatrix
from ..models.splitting import SplittingReport
from ..pencil.spectrum import DEFAULT_REAL_TOLERANCE, check_same_dim, pencil_spectrum, require_invertible

logger = logging.getLogger(__name__)


def contractivity_report(
    a: SymmetricMatrix,
    m: SymmetricMatrix,
    real_tolerance: float = DEFAULT_REAL_TOLERANCE,
    zero_tolerance: Optional[float] = None,
) -> SplittingReport:
    """Spectral radius of I - M⁻¹A and the resulting contractivity verdict.

    The iteration x ← x + M⁻¹(b - Ax) contracts exactly when every eigenvalue λ of
    M⁻¹A lies in the open disc |1 - λ| < 1.

    Args:
        a: Symmetric invertible A
        m: Symmetric invertible M
        real_tolerance: Real/complex classification tolerance
        zero_tolerance: Inertia zero tolerance

    Returns:
        SplittingReport including the eigenvalue count report

    Raises:
        SingularMatrixError: If A or M is singular
    """
    check_same_dim(a, m)
    inertia_a = require_invertible(a, "A", zero_tolerance)
    inertia_m = require_invertible(m, "M", zero_tolerance)
    classification = pencil_spectrum(a, m, real_tolerance, zero_tolerance)

    distances = [abs(1.0 - value) for value in classification.eigenvalues]
    radius = max(distances)
    in_disc = all(d < 1.0 for d in distances)
    counts = count_report(a, m, classification, real_tolerance, zero_tolerance)

    report = SplittingReport(
        inertia_a=inertia_a,
        inertia_m=inertia_m,
        r=counts.r,
        classification=classification,
        spectral_radius=radius,
        contractive=radius < 1.0,
        all_eigenvalues_in_unit_disc=in_disc,
        count_report=counts,
    )
    if inertia_a != inertia_m and report.contractive:
        logger.warning(f"Contractive splitting reported with differing inertia {inertia_a} vs {inertia_m}")

    logger.debug(f"Spectral radius of I - M^-1 A: {radius:.6g} (contractive={report.contractive})")
    return report
