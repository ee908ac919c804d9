"""Splitting diagnostics and stationary-iteration traces."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np
import numpy.typing as npt

from .homotopy import CountReport
from .pencil import PencilClassification
from .spectrum import Inertia

STOP_CONVERGED = "converged"
STOP_DIVERGED = "diverged"
STOP_MAX_ITER = "max_iter"


@dataclass(frozen=True)
class SplittingReport:
    """Contractivity of x ← x + M⁻¹(b - Ax) read from the spectrum of M⁻¹A."""

    inertia_a: Inertia
    inertia_m: Inertia
    r: int
    classification: PencilClassification
    spectral_radius: float
    contractive: bool
    all_eigenvalues_in_unit_disc: bool
    count_report: CountReport

    def to_dict(self) -> Dict[str, Any]:
        return {
            "inertiaA": self.inertia_a.to_dict(),
            "inertiaM": self.inertia_m.to_dict(),
            "r": self.r,
            "spectralRadius": self.spectral_radius,
            "contractive": self.contractive,
            "allEigenvaluesInUnitDisc": self.all_eigenvalues_in_unit_disc,
            "counts": self.count_report.to_dict(),
        }


@dataclass
class IterationTrace:
    """Residual history of an iterative solve.

    ``residual_norms[0]`` is the initial residual; one entry is appended per step.
    """

    residual_norms: List[float] = field(default_factory=list)
    iterates: Optional[List[npt.NDArray[np.float64]]] = None
    stop_reason: str = STOP_MAX_ITER
    solution: Optional[npt.NDArray[np.float64]] = None

    @property
    def iterations(self) -> int:
        return max(len(self.residual_norms) - 1, 0)

    @property
    def converged(self) -> bool:
        return self.stop_reason == STOP_CONVERGED

    @property
    def diverged(self) -> bool:
        return self.stop_reason == STOP_DIVERGED

    @property
    def final_residual(self) -> float:
        return self.residual_norms[-1] if self.residual_norms else math.nan

    def asymptotic_rate(self, window: int = 10) -> float:
        """Geometric residual reduction factor fitted over the last ``window`` steps.

        exp of the least-squares slope of log(residual) against step index; NaN when
        fewer than two usable residuals remain.
        """
        tail = self.residual_norms[-(window + 1):]
        points = [(k, math.log(r)) for k, r in enumerate(tail) if r > 0.0 and math.isfinite(r)]
        if len(points) < 2:
            return math.nan
        steps = np.array([k for k, _ in points], dtype=np.float64)
        logs = np.array([v for _, v in points], dtype=np.float64)
        slope = np.polyfit(steps, logs, 1)[0]
        return float(math.exp(slope))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "iterations": self.iterations,
            "stopReason": self.stop_reason,
            "residualNorms": list(self.residual_norms),
        }
