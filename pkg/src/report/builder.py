"""Assembly of ReportDocuments, seeded sweeps and the worked-example comparison."""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from ..generators.example import (
    COUNTS,
    EIGENVALUES_A,
    EIGENVALUES_M,
    PENCIL_RECIPROCALS,
    S_CROSSINGS,
    T_CROSSING_THETAS,
    T_CROSSINGS,
    avoidance_example,
    reciprocal_spectrum,
)
from ..generators.random_matrices import random_pair
from ..homotopy.counting import count_report
from ..homotopy.tracer import DEFAULT_STEPS, locate_crossings
from ..kernel.errors import ParameterError
from ..kernel.jacobi import sym_eigen
from ..models.homotopy import HomotopyKind
from ..models.matrix import SymmetricMatrix
from ..models.report import CheckResult, ReportDocument, SweepSummary
from ..pencil.spectrum import DEFAULT_REAL_TOLERANCE, pencil_spectrum
from ..splitting.contractivity import contractivity_report

logger = logging.getLogger(__name__)

DEFAULT_SWEEP_STEPS = 64
EXAMPLE_TOLERANCE = 1e-3


def build_report(
    a: SymmetricMatrix,
    m: SymmetricMatrix,
    inputs: Dict[str, Any],
    steps: int = DEFAULT_STEPS,
    real_tolerance: float = DEFAULT_REAL_TOLERANCE,
    zero_tolerance: Optional[float] = None,
) -> ReportDocument:
    """Run every pair diagnostic on (A, M) and collect the verdicts.

    Args:
        a: Symmetric invertible A
        m: Symmetric invertible M
        inputs: File names or generator descriptor recorded in the report
        steps: Grid cells for the crossing search
        real_tolerance: Pencil classification tolerance
        zero_tolerance: Inertia zero tolerance

    Returns:
        ReportDocument

    Raises:
        SingularMatrixError: If A or M is singular
        ParameterError: On dimension mismatch or steps < 16
    """
    splitting = contractivity_report(a, m, real_tolerance, zero_tolerance)
    counts = splitting.count_report
    classification = splitting.classification

    crossings_t = locate_crossings(a, m, HomotopyKind.T, steps)
    crossings_s = locate_crossings(a, m, HomotopyKind.S, steps)
    inertia_differs = splitting.inertia_a != splitting.inertia_m

    report = ReportDocument(
        inputs=inputs,
        inertia_a=splitting.inertia_a,
        inertia_m=splitting.inertia_m,
        r=counts.r,
        s=counts.s,
        t=counts.t,
        negative_real_eigenvalues=list(classification.negative_real),
        positive_real_eigenvalues=list(classification.positive_real),
        complex_pairs=list(classification.complex_pairs),
        crossings_t=[c.theta_hat for c in crossings_t],
        crossings_s=[c.theta_hat for c in crossings_s],
        spectral_radius=splitting.spectral_radius,
        contractive=splitting.contractive,
        lemma_consistent=(not inertia_differs) or classification.negative_count > 0,
        proposition_holds=counts.proposition_holds,
        corollary_holds=counts.corollary_holds,
    )
    if report.violations:
        logger.warning(f"Report for {inputs} has {report.violations} violated checks")
    return report


def parse_dims(text: str) -> Tuple[int, int]:
    """Parse ``A..B`` (or a single ``N``) into an inclusive dimension range.

    Raises:
        ParameterError: If the text is malformed or the range is empty
    """
    parts = text.split("..")
    try:
        bounds = [int(part) for part in parts]
    except ValueError:
        raise ParameterError(f"dims must look like A..B, got {text!r}") from None
    if len(bounds) == 1:
        bounds = bounds * 2
    if len(bounds) != 2 or bounds[0] < 1 or bounds[1] < bounds[0]:
        raise ParameterError(f"dims must satisfy 1 <= A <= B, got {text!r}")
    return bounds[0], bounds[1]


def run_sweep(
    dims: Tuple[int, int],
    count: int,
    seed: int,
    mismatch_only: bool = False,
    steps: int = DEFAULT_SWEEP_STEPS,
    workers: int = 1,
    real_tolerance: float = DEFAULT_REAL_TOLERANCE,
    zero_tolerance: Optional[float] = None,
    on_case: Optional[Callable[[], None]] = None,
) -> SweepSummary:
    """Analyze ``count`` seeded random pairs per dimension and aggregate the verdicts.

    Cases are evaluated on a thread pool; reports come back in (dim, index) order
    regardless of ``workers``.

    Args:
        dims: Inclusive (low, high) dimension range
        count: Pairs per dimension (0 gives an empty summary)
        seed: Suite seed; case seeds derive from (seed, dim, index)
        mismatch_only: Draw only pairs whose inertias differ
        steps: Grid cells for each crossing search
        workers: Thread pool size
        real_tolerance: Pencil classification tolerance
        zero_tolerance: Inertia zero tolerance (None scales with the matrix)
        on_case: Called once per finished case (progress reporting)

    Returns:
        SweepSummary with every report

    Raises:
        ParameterError: On an invalid range or negative count
    """
    low, high = dims
    if low < 1 or high < low:
        raise ParameterError(f"dims must satisfy 1 <= low <= high, got {low}..{high}")
    if count < 0:
        raise ParameterError(f"count must be >= 0, got {count}")

    mode = "mismatched" if mismatch_only else "any"
    cases = [(dim, index) for dim in range(low, high + 1) for index in range(count)]

    def run_case(case: Tuple[int, int]) -> ReportDocument:
        dim, index = case
        a, m = random_pair(dim, seed, inertia=mode, index=index)
        inputs = {"generator": "random_pair", "dim": dim, "index": index, "seed": seed, "inertia": mode}
        report = build_report(a, m, inputs, steps=steps, real_tolerance=real_tolerance, zero_tolerance=zero_tolerance)
        if on_case is not None:
            on_case()
        return report

    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        reports = list(executor.map(run_case, cases))

    summary = SweepSummary()
    for report in reports:
        summary.add(report)

    logger.info(f"Sweep over dims {low}..{high} ({summary.cases} cases): {summary.violations} violations")
    return summary


def _compare(
    label: str, expected: Sequence[complex], actual: Sequence[complex], tolerance: float
) -> List[CheckResult]:
    """Pair values by position; a missing or surplus value is a failed row against NaN."""
    size = max(len(expected), len(actual))
    expected_padded = list(expected) + [complex(math.nan)] * (size - len(expected))
    actual_padded = list(actual) + [complex(math.nan)] * (size - len(actual))
    return [
        CheckResult(name=f"{label}[{i + 1}]", expected=e, actual=v, tolerance=tolerance)
        for i, (e, v) in enumerate(zip(expected_padded, actual_padded))
    ]


def example_checks(tolerance: float = EXAMPLE_TOLERANCE, steps: int = DEFAULT_STEPS) -> Dict[str, List[CheckResult]]:
    """Recompute every reference quantity of the avoidance example and compare.

    The pencil spectrum is listed as eigenvalues of A⁻¹M, so the reciprocals of the
    computed M⁻¹A spectrum are compared. Crossings are the raw θ̂ of T(θ). Eigenvalues
    and crossings are compared within ``tolerance``; the integer counts must match exactly.

    Returns:
        Check rows grouped by quantity, in display order
    """
    a, m = avoidance_example()
    pencil = pencil_spectrum(a, m)
    counts = count_report(a, m, pencil)
    t_crossings = locate_crossings(a, m, HomotopyKind.T, steps)
    s_crossings = locate_crossings(a, m, HomotopyKind.S, steps)

    actual_counts = {"p": counts.p, "n": counts.n, "r": counts.r, "s": counts.s, "t": counts.t}
    count_rows = [
        CheckResult(
            name=name,
            expected=expected,
            actual=math.nan if actual_counts[name] is None else actual_counts[name],
            tolerance=0.0,
        )
        for name, expected in COUNTS.items()
    ]
    count_rows.append(CheckResult(name="T crossings", expected=T_CROSSINGS, actual=len(t_crossings), tolerance=0.0))
    count_rows.append(CheckResult(name="S crossings", expected=S_CROSSINGS, actual=len(s_crossings), tolerance=0.0))

    groups = {
        "eigenvalues of A": _compare("lambda_A", EIGENVALUES_A, list(sym_eigen(a).eigenvalues), tolerance),
        "eigenvalues of M": _compare("lambda_M", EIGENVALUES_M, list(sym_eigen(m).eigenvalues), tolerance),
        "eigenvalues of A^-1 M": _compare(
            "1/lambda", PENCIL_RECIPROCALS, list(reciprocal_spectrum(pencil.eigenvalues)), tolerance
        ),
        "crossings of T(theta)": _compare("theta", T_CROSSING_THETAS, [c.theta_hat for c in t_crossings], tolerance),
        "counts": count_rows,
    }
    failed = sum(1 for rows in groups.values() for row in rows if not row.passed)
    logger.info(f"Worked example: {failed} failed checks at tolerance {tolerance:g}")
    return groups
