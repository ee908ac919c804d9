"""Main CLI entry point using Typer."""

import logging
import sys
from pathlib import Path
from typing import NoReturn, Optional, Tuple

import typer
from rich.console import Console

from ..generators.errors import GeneratorError
from ..generators.example import avoidance_example
from ..homotopy.tracer import trace as trace_homotopy
from ..kernel.errors import KernelError, ParameterError
from ..models.homotopy import HomotopyKind
from ..models.matrix import SymmetricMatrix
from ..report.builder import EXAMPLE_TOLERANCE, build_report, example_checks, parse_dims, run_sweep
from ..report.formatter import ReportFormatter
from ..utils.export import export_to_json, export_trajectory_csv, to_json, trajectory_to_csv
from ..utils.logging import setup_logging
from ..utils.matrix_market import MatrixMarketError, read_matrix_market, write_matrix_market
from ..utils.progress import create_progress
from .config import Config

logger = logging.getLogger(__name__)

# Create Typer app
app = typer.Typer(
    name="inertiadiag",
    help="Inertia diagnostics - homotopy, pencil and splitting checks for symmetric matrix pairs",
    add_completion=False,
)

# Rich consoles for results and for errors
console = Console()
err_console = Console(stderr=True)

# Global config
config: Optional[Config] = None

EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3

OUTPUT_FORMATS = ("text", "json")


def _config() -> Config:
    global config
    if config is None:
        config = Config.load()
    return config


def _fail(message: str, code: int) -> NoReturn:
    err_console.print(f"✗ {message}", style="bold red")
    raise typer.Exit(code=code)


def _check_format(output_format: str) -> str:
    fmt = output_format.lower()
    if fmt not in OUTPUT_FORMATS:
        _fail(f"Unsupported format '{output_format}'. Use one of: {', '.join(OUTPUT_FORMATS)}", EXIT_USAGE)
    return fmt


def _load_pair(path_a: Path, path_m: Path, symmetrize: bool) -> Tuple[SymmetricMatrix, SymmetricMatrix]:
    try:
        a = read_matrix_market(path_a, symmetrize=symmetrize)
        m = read_matrix_market(path_m, symmetrize=symmetrize)
    except MatrixMarketError as e:
        _fail(f"Parse error: {e}", EXIT_USAGE)
    except FileNotFoundError as e:
        _fail(f"File not found: {e.filename or e}", EXIT_USAGE)

    if a.dim != m.dim:
        _fail(f"Dimension mismatch: {path_a} is {a.dim}x{a.dim}, {path_m} is {m.dim}x{m.dim}", EXIT_USAGE)
    return a, m


@app.callback()
def main(
    config_file: Optional[str] = typer.Option(
        None, "--config", help="Path to config file (default: ./.inertiadiag.yaml or ~/.inertiadiag.yaml)"
    ),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log to stderr at the configured log_level"),
    quiet: bool = typer.Option(False, "--quiet", "-q", help="Suppress output except errors"),
    log_file: Optional[str] = typer.Option(None, "--log-file", help="Write full debug log to this file"),
    no_color: bool = typer.Option(False, "--no-color", help="Disable colored output"),
):
    """Inertia diagnostics for symmetric matrix pairs (A, M)."""
    global config

    # Load configuration
    config = Config.load(config_file)

    # Setup logging
    log_level = "ERROR" if quiet else config.log_level
    setup_logging(level=log_level, log_file=log_file, verbose=verbose)

    # Colors and quiet mode apply to both consoles for this invocation
    console.no_color = no_color
    err_console.no_color = no_color
    console.quiet = quiet


@app.command()
def version():
    """Show version information."""
    import numpy

    from .. import __version__

    console.print(f"inertia-diagnostics version {__version__}")
    console.print(f"Python {sys.version.split()[0]}")
    console.print(f"numpy {numpy.__version__}")


@app.command()
def analyze(
    path_a: Path = typer.Argument(..., help="Matrix Market file holding A"),
    path_m: Path = typer.Argument(..., help="Matrix Market file holding M"),
    output_format: str = typer.Option("text", "--format", "-f", help="Output format: text or json"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Write the JSON report to this file"),
    tol_zero: Optional[float] = typer.Option(None, "--tol-zero", help="Inertia zero tolerance (default 1e-12*dim*max)"),
    tol_real: Optional[float] = typer.Option(None, "--tol-real", help="Real/complex classification tolerance"),
    symmetrize: bool = typer.Option(False, "--symmetrize", help="Average general input with its transpose"),
    steps: Optional[int] = typer.Option(None, "--steps", help="Grid cells for the crossing search"),
):
    """Inertias, pencil spectrum, crossings and contractivity of one pair.

    Reads A and M from Matrix Market files and reports every verdict; with
    --format json the schema-v1 ReportDocument is printed (or written to --out).
    """
    cfg = _config()
    fmt = _check_format(output_format)
    a, m = _load_pair(path_a, path_m, symmetrize)

    try:
        report = build_report(
            a,
            m,
            inputs={"A": str(path_a), "M": str(path_m)},
            steps=steps if steps is not None else cfg.steps,
            real_tolerance=tol_real if tol_real is not None else cfg.real_tolerance,
            zero_tolerance=tol_zero if tol_zero is not None else cfg.zero_tolerance,
        )
    except ParameterError as e:
        _fail(f"Invalid parameter: {e}", EXIT_USAGE)
    except KernelError as e:
        _fail(f"Numerical error: {e}", EXIT_NUMERICAL)

    if out is not None:
        export_to_json(report.to_dict(), out)

    if fmt == "json":
        if out is None:
            typer.echo(to_json(report.to_dict()), nl=False)
        else:
            console.print(f"✓ Wrote report to {out}", style="green")
        return

    ReportFormatter(console).format_report(report)
    if out is not None:
        console.print(f"✓ Wrote report to {out}", style="green")


@app.command()
def trace(
    path_a: Path = typer.Argument(..., help="Matrix Market file holding A"),
    path_m: Path = typer.Argument(..., help="Matrix Market file holding M"),
    kind: HomotopyKind = typer.Option(
        HomotopyKind.T, "--kind", "-k", case_sensitive=False, help="T: (1-t)A + tM, S: (1-t)A - tM"
    ),
    steps: Optional[int] = typer.Option(None, "--steps", help="Grid cells (>= 16)"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="CSV output file (default: stdout)"),
    workers: Optional[int] = typer.Option(None, "--workers", "-w", help="Threads for per-point eigensolves"),
    symmetrize: bool = typer.Option(False, "--symmetrize", help="Average general input with its transpose"),
):
    """Sample the eigenvalue curves of a homotopy and emit them as CSV."""
    cfg = _config()
    a, m = _load_pair(path_a, path_m, symmetrize)

    try:
        trajectory = trace_homotopy(
            a,
            m,
            kind=kind,
            steps=steps if steps is not None else cfg.steps,
            workers=workers if workers is not None else cfg.workers,
            zero_tolerance=cfg.zero_tolerance,
        )
    except ParameterError as e:
        _fail(f"Invalid parameter: {e}", EXIT_USAGE)
    except KernelError as e:
        _fail(f"Numerical error: {e}", EXIT_NUMERICAL)

    if out is None:
        typer.echo(trajectory_to_csv(trajectory), nl=False)
        return

    export_trajectory_csv(trajectory, out)
    ReportFormatter(console).format_trajectory(trajectory, out)


@app.command()
def example(
    check: bool = typer.Option(False, "--check", help="Exit 1 unless every recomputed value matches"),
    tolerance: float = typer.Option(EXAMPLE_TOLERANCE, "--tolerance", help="Allowed deviation for real values"),
    steps: Optional[int] = typer.Option(None, "--steps", help="Grid cells for the crossing search"),
    save: Optional[Path] = typer.Option(None, "--save", help="Directory to write the pair as Matrix Market files"),
):
    """Recompute the 5x5 eigenvalue-avoidance example and compare with its reference values."""
    cfg = _config()

    if save is not None:
        a, m = avoidance_example()
        save.mkdir(parents=True, exist_ok=True)
        write_matrix_market(save / "example_A.mtx", a, comment="eigenvalue-avoidance example, A")
        write_matrix_market(save / "example_M.mtx", m, comment="eigenvalue-avoidance example, M")
        console.print(f"✓ Wrote example_A.mtx and example_M.mtx to {save}", style="green")

    try:
        groups = example_checks(tolerance=tolerance, steps=steps if steps is not None else cfg.steps)
    except ParameterError as e:
        _fail(f"Invalid parameter: {e}", EXIT_USAGE)
    except KernelError as e:
        _fail(f"Numerical error: {e}", EXIT_NUMERICAL)

    failed = ReportFormatter(console).format_checks(groups, tolerance)
    if check and failed:
        raise typer.Exit(code=EXIT_CHECK_FAILED)


@app.command()
def sweep(
    dims: str = typer.Option("2..6", "--dims", help="Inclusive dimension range A..B"),
    count: int = typer.Option(100, "--count", "-n", help="Random pairs per dimension"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Suite seed (default from config)"),
    mismatch_only: bool = typer.Option(False, "--mismatch-only", help="Only pairs whose inertias differ"),
    steps: Optional[int] = typer.Option(None, "--steps", help="Grid cells for each crossing search"),
    workers: Optional[int] = typer.Option(None, "--workers", "-w", help="Cases evaluated concurrently"),
    output_format: str = typer.Option("text", "--format", "-f", help="Output format: text or json"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Write summary and reports as JSON"),
):
    """Check the counting theory on seeded random pairs; exit 1 on any violation."""
    cfg = _config()
    fmt = _check_format(output_format)

    try:
        dim_range = parse_dims(dims)
        if count < 0:
            raise ParameterError(f"count must be >= 0, got {count}")
        total = (dim_range[1] - dim_range[0] + 1) * count
        json_to_stdout = fmt == "json" and out is None

        with create_progress(console, disable=json_to_stdout or console.quiet or total == 0) as progress:
            task = progress.add_task("Analyzing random pairs", total=total)
            summary = run_sweep(
                dim_range,
                count,
                seed=seed if seed is not None else cfg.seed,
                mismatch_only=mismatch_only,
                steps=steps if steps is not None else cfg.sweep_steps,
                workers=workers if workers is not None else cfg.workers,
                real_tolerance=cfg.real_tolerance,
                zero_tolerance=cfg.zero_tolerance,
                on_case=lambda: progress.advance(task),
            )
    except ParameterError as e:
        _fail(f"Invalid parameter: {e}", EXIT_USAGE)
    except (KernelError, GeneratorError) as e:
        _fail(f"Numerical error: {e}", EXIT_NUMERICAL)

    document = {"summary": summary.to_dict(), "reports": [report.to_dict() for report in summary.reports]}
    if out is not None:
        export_to_json(document, out)

    if json_to_stdout:
        typer.echo(to_json(document), nl=False)
    else:
        ReportFormatter(console).format_sweep(summary)
        if out is not None:
            console.print(f"✓ Wrote {summary.cases} reports to {out}", style="green")

    if summary.violations > 0:
        raise typer.Exit(code=EXIT_CHECK_FAILED)


def cli_main():
    """Entry point for console script."""
    app()


if __name__ == "__main__":
    cli_main()
