"""Data models for inertia diagnostics."""

from .homotopy import CountReport, Crossing, HomotopyKind, HomotopyTrajectory
from .matrix import DenseMatrix, SymmetricMatrix
from .pencil import DefiniteRealityCheck, LemmaVerdict, PencilClassification, SimilarityCheck
from .report import CheckResult, ReportDocument, SweepSummary
from .saddle import SaddlePointSystem
from .spectrum import GeneralSpectrum, Inertia, LdltFactorization, PivotBlock, SymEigenDecomposition
from .splitting import IterationTrace, SplittingReport

__all__ = [
    "SymmetricMatrix",
    "DenseMatrix",
    "Inertia",
    "SymEigenDecomposition",
    "LdltFactorization",
    "PivotBlock",
    "GeneralSpectrum",
    "HomotopyKind",
    "HomotopyTrajectory",
    "Crossing",
    "CountReport",
    "PencilClassification",
    "LemmaVerdict",
    "SimilarityCheck",
    "DefiniteRealityCheck",
    "SplittingReport",
    "IterationTrace",
    "SaddlePointSystem",
    "ReportDocument",
    "SweepSummary",
    "CheckResult",
]
