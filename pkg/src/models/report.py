"""
Data models for diagnostic reports.

ReportDocument is the schema-v1 artifact emitted by ``analyze`` and ``sweep``;
SweepSummary aggregates verdicts across generated cases; CheckResult is one row of
the worked-example comparison table.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from .spectrum import Inertia

SCHEMA_VERSION = "1"


@dataclass
class ReportDocument:
    """Combined inertia, pencil, homotopy and splitting verdicts for one (A, M) pair.

    Attributes:
        inputs: File names or a generator descriptor (dim, seed, index, inertia mode)
        inertia_a: Inertia of A
        inertia_m: Inertia of M
        r: Signed inertia shift, pos(M) - pos(A)
        s: Extra negative-real pairs, None if the count identity has no solution
        t: Extra positive-real pairs, None if the count identity has no solution
        crossings_t: Refined θ̂ of T(θ) = (1-θ)A + θM
        crossings_s: Refined θ̂ of S(θ) = (1-θ)A - θM
    """

    inputs: Dict[str, Any]
    inertia_a: Inertia
    inertia_m: Inertia
    r: int
    s: Optional[int]
    t: Optional[int]
    negative_real_eigenvalues: List[float]
    positive_real_eigenvalues: List[float]
    complex_pairs: List[complex]
    crossings_t: List[float]
    crossings_s: List[float]
    spectral_radius: float
    contractive: bool
    lemma_consistent: bool
    proposition_holds: bool
    corollary_holds: bool
    schema_version: str = SCHEMA_VERSION

    @property
    def crossings_match(self) -> bool:
        """Crossing counts agree with the real pencil eigenvalue counts."""
        return len(self.crossings_t) == len(self.negative_real_eigenvalues) and len(self.crossings_s) == len(
            self.positive_real_eigenvalues
        )

    @property
    def violations(self) -> int:
        checks = [self.lemma_consistent, self.proposition_holds, self.corollary_holds, self.crossings_match]
        return sum(1 for ok in checks if not ok)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to the schema-v1 dictionary (camelCase keys)."""
        return {
            "schemaVersion": self.schema_version,
            "inputs": dict(self.inputs),
            "inertiaA": self.inertia_a.to_dict(),
            "inertiaM": self.inertia_m.to_dict(),
            "r": self.r,
            "s": self.s,
            "t": self.t,
            "negativeRealEigenvalues": list(self.negative_real_eigenvalues),
            "positiveRealEigenvalues": list(self.positive_real_eigenvalues),
            "complexPairs": [{"re": z.real, "im": z.imag} for z in self.complex_pairs],
            "crossingsT": list(self.crossings_t),
            "crossingsS": list(self.crossings_s),
            "spectralRadius": self.spectral_radius,
            "contractive": self.contractive,
            "lemmaConsistent": self.lemma_consistent,
            "propositionHolds": self.proposition_holds,
            "corollaryHolds": self.corollary_holds,
        }


@dataclass
class SweepSummary:
    """Aggregated verdicts over a seeded sweep of random pairs."""

    cases: int = 0
    lemma_failures: int = 0
    proposition_failures: int = 0
    corollary_failures: int = 0
    crossing_mismatches: int = 0
    contractive_cases: int = 0
    reports: List[ReportDocument] = field(default_factory=list)

    @property
    def violations(self) -> int:
        return self.lemma_failures + self.proposition_failures + self.corollary_failures + self.crossing_mismatches

    def add(self, report: ReportDocument) -> None:
        self.cases += 1
        self.reports.append(report)
        if not report.lemma_consistent:
            self.lemma_failures += 1
        if not report.proposition_holds:
            self.proposition_failures += 1
        if not report.corollary_holds:
            self.corollary_failures += 1
        if not report.crossings_match:
            self.crossing_mismatches += 1
        if report.contractive:
            self.contractive_cases += 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "cases": self.cases,
            "lemmaFailures": self.lemma_failures,
            "propositionFailures": self.proposition_failures,
            "corollaryFailures": self.corollary_failures,
            "crossingMismatches": self.crossing_mismatches,
            "contractiveCases": self.contractive_cases,
            "violations": self.violations,
        }


@dataclass(frozen=True)
class CheckResult:
    """One recomputed quantity compared with its reference value."""

    name: str
    expected: complex
    actual: complex
    tolerance: float

    @property
    def error(self) -> float:
        return abs(self.actual - self.expected)

    @property
    def passed(self) -> bool:
        return self.error <= self.tolerance
