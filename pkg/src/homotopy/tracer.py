"""Eigenvalue homotopies between A and ±M and their singular points."""

import logging
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple, Union

import numpy as np
import numpy.typing as npt

from ..kernel.errors import ParameterError
from ..kernel.jacobi import sym_eigen
from ..kernel.ldlt import negative_count
from ..models.homotopy import Crossing, HomotopyKind, HomotopyTrajectory
from ..models.matrix import SymmetricMatrix
from ..pencil.spectrum import check_same_dim, require_invertible

logger = logging.getLogger(__name__)

MIN_STEPS = 16
DEFAULT_STEPS = 512

# Final bisection bracket on θ
BRACKET_WIDTH = 1e-10

# Below this cell width the guarded scan hands over to plain bisection
SCAN_WIDTH = 1e-7

# Margin on the Lipschitz bound of the eigenvalue curves
GUARD_FACTOR = 1.01

# Guard factorizations allowed per grid cell, shared across the whole scan
GUARD_BUDGET_PER_CELL = 32

KindLike = Union[HomotopyKind, str]


def homotopy_matrix(
    a: SymmetricMatrix, m: SymmetricMatrix, theta: float, kind: KindLike = HomotopyKind.T
) -> SymmetricMatrix:
    """T(θ) = (1-θ)A + θM, or S(θ) = (1-θ)A - θM for kind S."""
    sign = 1.0 if HomotopyKind(kind) is HomotopyKind.T else -1.0
    return SymmetricMatrix((1.0 - theta) * a.data + (sign * theta) * m.data)


def crossing_eigenvalue(theta_hat: float, kind: KindLike = HomotopyKind.T) -> float:
    """Pencil eigenvalue of M⁻¹A implied by a singular point θ̂ of the homotopy.

    Raises:
        ParameterError: If θ̂ is not strictly inside (0, 1)
    """
    if not 0.0 < theta_hat < 1.0:
        raise ParameterError(f"theta_hat must lie in (0, 1), got {theta_hat}")
    if HomotopyKind(kind) is HomotopyKind.T:
        return theta_hat / (theta_hat - 1.0)
    return theta_hat / (1.0 - theta_hat)


class _CrossingSearch:
    """Negative-count bookkeeping for one homotopy H(θ) = A + θE."""

    def __init__(self, a: SymmetricMatrix, m: SymmetricMatrix, kind: HomotopyKind, guard_budget: int) -> None:
        self.a = a
        self.m = m
        self.kind = kind
        direction = (m.data if kind is HomotopyKind.T else -m.data) - a.data
        self.lipschitz = float(np.sqrt(np.sum(direction * direction)))
        self.guard_budget = guard_budget
        self.guard_evaluations = 0
        self.unresolved = 0
        self.evaluations = 0
        self.found: List[Tuple[float, float]] = []

    def count(self, theta: float) -> int:
        self.evaluations += 1
        return negative_count(homotopy_matrix(self.a, self.m, theta, self.kind))

    def band(self, theta: float, width: float) -> int:
        """Eigenvalues of H(θ) within the distance the curves can travel over ``width``."""
        delta = GUARD_FACTOR * self.lipschitz * width
        if delta == 0.0:
            return 0
        h = homotopy_matrix(self.a, self.m, theta, self.kind).data
        shift = delta * np.eye(self.a.dim)
        self.evaluations += 2
        self.guard_evaluations += 2
        below = negative_count(SymmetricMatrix(h - shift))
        above = negative_count(SymmetricMatrix(h + shift))
        return below - above

    def scan(self, cells: List[Tuple[float, float, int, int]]) -> None:
        """Split grid cells breadth first until the guard clears them or its budget runs out.

        Count changes are bisected either way. A single curve in the band with a unit
        count change needs no further splitting.
        """
        queue = deque(cells)
        while queue:
            lo, hi, neg_lo, neg_hi = queue.popleft()
            width = hi - lo
            if width <= SCAN_WIDTH or self.guard_evaluations >= self.guard_budget:
                if neg_lo == neg_hi and width > SCAN_WIDTH:
                    self.unresolved += 1
                self.bisect(lo, hi, neg_lo, neg_hi)
                continue
            near = self.band(lo, width)
            change = abs(neg_hi - neg_lo)
            if near == 0 and change != 0:
                logger.debug(f"count changed in a guarded-clean cell [{lo:.6g}, {hi:.6g}]")
            if near == 0 or (near == 1 and change == 1):
                self.bisect(lo, hi, neg_lo, neg_hi)
                continue
            mid = 0.5 * (lo + hi)
            self.guard_evaluations += 1
            neg_mid = self.count(mid)
            queue.append((lo, mid, neg_lo, neg_mid))
            queue.append((mid, hi, neg_mid, neg_hi))

    def bisect(self, lo: float, hi: float, neg_lo: int, neg_hi: int) -> None:
        if neg_lo == neg_hi:
            return
        if hi - lo <= BRACKET_WIDTH:
            theta_hat = 0.5 * (lo + hi)
            for _ in range(abs(neg_hi - neg_lo)):
                self.found.append((theta_hat, hi - lo))
            return
        mid = 0.5 * (lo + hi)
        neg_mid = self.count(mid)
        self.bisect(lo, mid, neg_lo, neg_mid)
        self.bisect(mid, hi, neg_mid, neg_hi)


def _grid(steps: int) -> npt.NDArray[np.float64]:
    if steps < MIN_STEPS:
        raise ParameterError(f"steps must be >= {MIN_STEPS}, got {steps}")
    return np.linspace(0.0, 1.0, steps + 1)


def locate_crossings(
    a: SymmetricMatrix,
    m: SymmetricMatrix,
    kind: KindLike = HomotopyKind.T,
    steps: int = DEFAULT_STEPS,
) -> Tuple[Crossing, ...]:
    """Refined singular points of the homotopy, without sampling the eigenvalue curves.

    Grid cells are split breadth first until the Lipschitz guard proves them clean,
    with at most GUARD_BUDGET_PER_CELL guard factorizations per grid cell overall. Count
    changes are always bisected down to BRACKET_WIDTH, and a count change of c in the
    final bracket yields c crossings at its midpoint. Once the budget is spent, a pair
    of crossings inside one cell can go unseen.

    Raises:
        ParameterError: If steps < MIN_STEPS
    """
    kind = HomotopyKind(kind)
    check_same_dim(a, m)
    grid = _grid(steps)
    search = _CrossingSearch(a, m, kind, guard_budget=GUARD_BUDGET_PER_CELL * steps)

    counts = [search.count(float(theta)) for theta in grid]
    search.scan([(float(grid[i]), float(grid[i + 1]), counts[i], counts[i + 1]) for i in range(steps)])
    if search.unresolved:
        logger.debug(f"kind {kind.value}: guard budget spent, {search.unresolved} cells left unproven")

    crossings = tuple(
        Crossing(
            theta_hat=theta_hat,
            bracket_width=width,
            implied_pencil_eigenvalue=crossing_eigenvalue(theta_hat, kind),
        )
        for theta_hat, width in sorted(search.found)
    )
    logger.debug(
        f"kind {kind.value}: {len(crossings)} crossings, negative count {counts[0]} -> {counts[-1]}, "
        f"{search.evaluations} factorizations"
    )
    return crossings


def trace(
    a: SymmetricMatrix,
    m: SymmetricMatrix,
    kind: KindLike = HomotopyKind.T,
    steps: int = DEFAULT_STEPS,
    workers: int = 1,
    zero_tolerance: Optional[float] = None,
) -> HomotopyTrajectory:
    """Sample the sorted eigenvalue curves of T(θ) or S(θ) on a uniform grid over [0, 1].

    Args:
        a: Symmetric invertible A (the θ = 0 end)
        m: Symmetric invertible M; the θ = 1 end is M (kind T) or -M (kind S)
        kind: Homotopy kind
        steps: Number of grid cells (>= 16)
        workers: Threads used for the per-point eigendecompositions
        zero_tolerance: Inertia zero tolerance for the invertibility checks

    Returns:
        HomotopyTrajectory with curves in grid order and refined crossings

    Raises:
        SingularMatrixError: If A or M is singular (with its inertia)
        ParameterError: If steps < 16 or the dimensions differ
    """
    kind = HomotopyKind(kind)
    check_same_dim(a, m)
    grid = _grid(steps)
    require_invertible(a, "A", zero_tolerance)
    require_invertible(m, "M", zero_tolerance)

    def eigenvalues_at(theta: float) -> npt.NDArray[np.float64]:
        return sym_eigen(homotopy_matrix(a, m, float(theta), kind)).eigenvalues

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            rows = list(executor.map(eigenvalues_at, grid))
    else:
        rows = [eigenvalues_at(theta) for theta in grid]

    crossings = locate_crossings(a, m, kind, steps)
    start = negative_count(a)
    end = negative_count(homotopy_matrix(a, m, 1.0, kind))
    change = abs(end - start)
    if len(crossings) < change or (len(crossings) - change) % 2 != 0:
        logger.warning(f"kind {kind.value}: {len(crossings)} crossings inconsistent with count change {change}")

    logger.info(f"Traced kind {kind.value} homotopy (dim={a.dim}, steps={steps}): {len(crossings)} crossings")
    return HomotopyTrajectory(
        kind=kind,
        theta_grid=grid,
        curves=np.vstack(rows),
        crossings=crossings,
        start_negative_count=start,
        end_negative_count=end,
    )
