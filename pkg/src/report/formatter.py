"""
Terminal rendering of diagnostic results using Rich.

ReportFormatter renders single-pair reports, the worked-example comparison
table, sweep summaries and trajectory summaries.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Dict, Iterable, List, Optional

from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from ..models.homotopy import HomotopyTrajectory
from ..models.report import CheckResult, ReportDocument, SweepSummary


def _mark(ok: bool) -> str:
    return "[green]✓[/green]" if ok else "[red]✗[/red]"


def _number(value: complex) -> str:
    if isinstance(value, complex) and value.imag != 0.0:
        sign = "+" if value.imag > 0 else "-"
        return f"{value.real:.6g} {sign} {abs(value.imag):.6g}i"
    real = value.real if isinstance(value, complex) else value
    if math.isnan(real):
        return "-"
    return f"{real:.6g}"


def _values(values: Iterable[float]) -> str:
    text = ", ".join(f"{v:.6g}" for v in values)
    return text or "none"


class ReportFormatter:
    """Formats and renders diagnostic results on a Rich console."""

    def __init__(self, console: Optional[Console] = None) -> None:
        """
        Initialize formatter with Rich Console.

        Args:
            console: Rich Console instance (creates default if not provided)
        """
        self.console = console or Console()

    def format_report(self, report: ReportDocument) -> None:
        """Render one pair report: inputs, inertias, pencil spectrum, crossings, verdicts."""
        inputs = "\n".join(f"[bold]{key}:[/bold] {value}" for key, value in sorted(report.inputs.items()))
        self.console.print(Panel(inputs or "-", title="Pair diagnostics", border_style="blue", expand=False))

        inertia = Table(title="Inertia", show_header=True, header_style="bold")
        inertia.add_column("Matrix")
        inertia.add_column("p", justify="right")
        inertia.add_column("z", justify="right")
        inertia.add_column("n", justify="right")
        inertia.add_row("A", str(report.inertia_a.pos), str(report.inertia_a.zero), str(report.inertia_a.neg))
        inertia.add_row("M", str(report.inertia_m.pos), str(report.inertia_m.zero), str(report.inertia_m.neg))
        self.console.print(inertia)
        self.console.print(f"r = {report.r}, s = {report.s}, t = {report.t}\n")

        self.console.print("[bold]Eigenvalues of M^-1 A[/bold]")
        self.console.print(f"  negative real: {_values(report.negative_real_eigenvalues)}")
        self.console.print(f"  positive real: {_values(report.positive_real_eigenvalues)}")
        pairs = ", ".join(_number(complex(z.real, abs(z.imag))) for z in report.complex_pairs) or "none"
        self.console.print(f"  complex pairs: {pairs}\n")

        self.console.print("[bold]Homotopy crossings[/bold]")
        self.console.print(f"  T(theta): {len(report.crossings_t)} at {_values(report.crossings_t)}")
        self.console.print(f"  S(theta): {len(report.crossings_s)} at {_values(report.crossings_s)}\n")

        verdicts = Table(title="Verdicts", show_header=True, header_style="bold")
        verdicts.add_column("Check")
        verdicts.add_column("Value")
        verdicts.add_row("spectral radius of I - M^-1 A", f"{report.spectral_radius:.6g}")
        verdicts.add_row("contractive", _mark(report.contractive))
        verdicts.add_row("lemma consistent", _mark(report.lemma_consistent))
        verdicts.add_row("proposition holds", _mark(report.proposition_holds))
        verdicts.add_row("corollary holds", _mark(report.corollary_holds))
        verdicts.add_row("crossings match counts", _mark(report.crossings_match))
        self.console.print(verdicts)

    def format_checks(self, groups: Dict[str, List[CheckResult]], tolerance: float) -> int:
        """Render the comparison tables and return the number of failed rows."""
        failed = 0
        total = 0
        for title, rows in groups.items():
            table = Table(title=title, show_header=True, header_style="bold")
            table.add_column("Quantity")
            table.add_column("Expected", justify="right")
            table.add_column("Computed", justify="right")
            table.add_column("Error", justify="right")
            table.add_column("", justify="center")
            for row in rows:
                total += 1
                failed += 0 if row.passed else 1
                error = "-" if math.isnan(row.error) else f"{row.error:.2e}"
                table.add_row(row.name, _number(row.expected), _number(row.actual), error, _mark(row.passed))
            self.console.print(table)

        if failed:
            self.console.print(f"✗ {failed} of {total} checks failed (tolerance {tolerance:g})", style="bold red")
        else:
            self.console.print(f"✓ All {total} checks passed (tolerance {tolerance:g})", style="bold green")
        return failed

    def format_sweep(self, summary: SweepSummary) -> None:
        """Render aggregated sweep counts followed by the ``violations: N`` line."""
        table = Table(title="Sweep summary", show_header=True, header_style="bold")
        table.add_column("Metric")
        table.add_column("Count", justify="right")
        table.add_row("cases", str(summary.cases))
        table.add_row("contractive", str(summary.contractive_cases))
        table.add_row("lemma failures", str(summary.lemma_failures))
        table.add_row("proposition failures", str(summary.proposition_failures))
        table.add_row("corollary failures", str(summary.corollary_failures))
        table.add_row("crossing mismatches", str(summary.crossing_mismatches))
        self.console.print(table)
        self.console.print(f"violations: {summary.violations}", highlight=False)

    def format_trajectory(self, trajectory: HomotopyTrajectory, path: Optional[Path] = None) -> None:
        """Summarize a sampled homotopy and where it was written."""
        kind = trajectory.kind.value
        self.console.print(
            f"Kind {kind}: {trajectory.steps + 1} samples, dim {trajectory.dim}, "
            f"negative count {trajectory.start_negative_count} -> {trajectory.end_negative_count}"
        )
        for crossing in trajectory.crossings:
            self.console.print(
                f"  crossing theta={crossing.theta_hat:.10f}  "
                f"(pencil eigenvalue {crossing.implied_pencil_eigenvalue:.6g})"
            )
        if path is not None:
            self.console.print(f"✓ Wrote trajectory to {path}", style="green")
