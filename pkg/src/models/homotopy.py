"""Homotopy trajectory, crossing and count report types."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional, Tuple

import numpy as np
import numpy.typing as npt


class HomotopyKind(str, Enum):
    """T(θ) = (1-θ)A + θM  or  S(θ) = (1-θ)A - θM."""

    T = "T"
    S = "S"


@dataclass(frozen=True)
class Crossing:
    """A singular point θ̂ of the homotopy and the pencil eigenvalue it implies."""

    theta_hat: float
    bracket_width: float
    implied_pencil_eigenvalue: float


@dataclass(frozen=True)
class HomotopyTrajectory:
    """Sorted eigenvalue curves sampled on a uniform θ grid, plus refined crossings."""

    kind: HomotopyKind
    theta_grid: npt.NDArray[np.float64]
    curves: npt.NDArray[np.float64]
    crossings: Tuple[Crossing, ...]
    start_negative_count: int
    end_negative_count: int

    @property
    def steps(self) -> int:
        return int(self.theta_grid.shape[0]) - 1

    @property
    def dim(self) -> int:
        return int(self.curves.shape[1])

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def theta_hats(self) -> Tuple[float, ...]:
        return tuple(c.theta_hat for c in self.crossings)


@dataclass(frozen=True)
class CountReport:
    """Real pencil eigenvalue counts against the eigenvalue-avoidance formulas.

    negReal = |r| + 2s and posReal = |p + r - n| + 2t; ``s``/``t`` are None when no
    nonnegative integer solves the identity.
    """

    p: int
    n: int
    r: int
    neg_real_count: int
    pos_real_count: int
    s: Optional[int]
    t: Optional[int]
    proposition_holds: bool
    corollary_holds: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": self.p,
            "n": self.n,
            "r": self.r,
            "negRealCount": self.neg_real_count,
            "posRealCount": self.pos_real_count,
            "s": self.s,
            "t": self.t,
            "propositionHolds": self.proposition_holds,
            "corollaryHolds": self.corollary_holds,
        }
