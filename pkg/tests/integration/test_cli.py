"""
Integration tests for the inertiadiag CLI commands.

Tests end-to-end CLI execution on pairs written to Matrix Market files.
"""

from __future__ import annotations

import json
from unittest.mock import patch

import pytest
from typer.testing import CliRunner

from src.cli.main import app
from src.kernel.errors import ConvergenceError
from src.models.matrix import SymmetricMatrix
from src.models.report import SweepSummary
from src.report.builder import build_report
from src.utils.matrix_market import write_matrix_market


@pytest.fixture
def cli_runner():
    """Create a Typer CLI runner."""
    return CliRunner()


@pytest.fixture
def example_files(temp_dir, example_pair):
    """Write the worked example pair to A.mtx and M.mtx."""
    a, m = example_pair
    return write_matrix_market(temp_dir / "A.mtx", a), write_matrix_market(temp_dir / "M.mtx", m)


@pytest.fixture
def diagonal_files(temp_dir, indefinite_pair):
    """Write the diagonal pair to D_A.mtx and D_M.mtx."""
    a, m = indefinite_pair
    return write_matrix_market(temp_dir / "D_A.mtx", a), write_matrix_market(temp_dir / "D_M.mtx", m)


class TestVersionCommand:
    """Tests for inertiadiag version."""

    def test_version(self, cli_runner):
        """Test the version line."""
        result = cli_runner.invoke(app, ["version"])

        assert result.exit_code == 0
        assert "inertia-diagnostics version 0.1.0" in result.stdout


class TestAnalyzeCommand:
    """Tests for inertiadiag analyze."""

    def test_text_report(self, cli_runner, example_files):
        """Test the text report on the worked example."""
        path_a, path_m = example_files

        result = cli_runner.invoke(app, ["analyze", str(path_a), str(path_m), "--steps", "64"])

        assert result.exit_code == 0
        assert "Inertia" in result.stdout
        assert "T(theta): 3" in result.stdout

    def test_json_to_stdout(self, cli_runner, example_files):
        """Test --format json prints the schema-v1 document."""
        path_a, path_m = example_files

        result = cli_runner.invoke(app, ["analyze", str(path_a), str(path_m), "--format", "json", "--steps", "64"])

        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["schemaVersion"] == "1"
        assert data["inertiaA"] == {"p": 3, "z": 0, "n": 2}
        assert data["inertiaM"] == {"p": 2, "z": 0, "n": 3}
        assert (data["r"], data["s"], data["t"]) == (-1, 1, 0)
        assert len(data["crossingsT"]) == 3
        assert data["crossingsS"] == []
        assert len(data["complexPairs"]) == 1
        assert data["contractive"] is False

    def test_identity_pair_is_contractive(self, cli_runner, temp_dir):
        """Test A = M = I gives ρ = 0 and a contractive splitting."""
        path = write_matrix_market(temp_dir / "I.mtx", SymmetricMatrix.identity(3))

        result = cli_runner.invoke(app, ["analyze", str(path), str(path), "--format", "json", "--steps", "16"])

        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["contractive"] is True
        assert data["spectralRadius"] == 0
        assert data["positiveRealEigenvalues"] == [1, 1, 1]
        assert data["crossingsT"] == []

    def test_out_writes_json(self, cli_runner, diagonal_files, temp_dir):
        """Test --out writes the JSON report next to the text output."""
        path_a, path_m = diagonal_files
        out = temp_dir / "report.json"

        result = cli_runner.invoke(app, ["analyze", str(path_a), str(path_m), "--out", str(out), "--steps", "32"])

        assert result.exit_code == 0
        assert "Wrote report" in result.stdout
        data = json.loads(out.read_text())
        assert data["negativeRealEigenvalues"] == [-2.0]
        assert data["positiveRealEigenvalues"] == [0.5, 3.0]

    def test_missing_file(self, cli_runner, temp_dir, diagonal_files):
        """Test a missing input exits 2."""
        path_a, _ = diagonal_files

        result = cli_runner.invoke(app, ["analyze", str(path_a), str(temp_dir / "absent.mtx")])

        assert result.exit_code == 2
        assert "File not found" in result.output

    def test_parse_error(self, cli_runner, temp_dir, diagonal_files):
        """Test a malformed file exits 2 with its location."""
        path_a, _ = diagonal_files
        bad = temp_dir / "bad.mtx"
        bad.write_text("%%MatrixMarket matrix array real symmetric\n1 1\nx\n")

        result = cli_runner.invoke(app, ["analyze", str(path_a), str(bad)])

        assert result.exit_code == 2
        assert "Parse error" in result.output

    def test_dimension_mismatch(self, cli_runner, temp_dir, diagonal_files):
        """Test pairs of different size exit 2."""
        path_a, _ = diagonal_files
        small = write_matrix_market(temp_dir / "small.mtx", SymmetricMatrix.identity(2))

        result = cli_runner.invoke(app, ["analyze", str(path_a), str(small)])

        assert result.exit_code == 2
        assert "Dimension mismatch" in result.output

    def test_unsupported_format(self, cli_runner, diagonal_files):
        """Test an unknown --format exits 2."""
        path_a, path_m = diagonal_files

        result = cli_runner.invoke(app, ["analyze", str(path_a), str(path_m), "--format", "xml"])

        assert result.exit_code == 2

    def test_steps_too_small(self, cli_runner, diagonal_files):
        """Test a crossing grid below 16 cells exits 2."""
        path_a, path_m = diagonal_files

        result = cli_runner.invoke(app, ["analyze", str(path_a), str(path_m), "--steps", "8"])

        assert result.exit_code == 2
        assert "Invalid parameter" in result.output

    def test_singular_m(self, cli_runner, temp_dir, diagonal_files):
        """Test a singular M exits 3."""
        path_a, _ = diagonal_files
        singular = write_matrix_market(temp_dir / "singular.mtx", SymmetricMatrix.diagonal([1.0, 0.0, 2.0]))

        result = cli_runner.invoke(app, ["analyze", str(path_a), str(singular)])

        assert result.exit_code == 3
        assert "Numerical error" in result.output

    @patch("src.cli.main.build_report")
    def test_convergence_failure(self, mock_build, cli_runner, diagonal_files):
        """Test an eigensolver that does not converge exits 3."""
        mock_build.side_effect = ConvergenceError(routine="general_eigen", iterations=30, matrix_hash="abc123")
        path_a, path_m = diagonal_files

        result = cli_runner.invoke(app, ["analyze", str(path_a), str(path_m)])

        assert result.exit_code == 3
        assert "general_eigen" in result.output


class TestTraceCommand:
    """Tests for inertiadiag trace."""

    def test_csv_to_stdout(self, cli_runner, diagonal_files):
        """Test the CSV header, row count and crossing comment."""
        path_a, path_m = diagonal_files

        result = cli_runner.invoke(app, ["trace", str(path_a), str(path_m), "--steps", "16"])

        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0] == "theta,lambda_1,lambda_2,lambda_3"
        assert lines[1] == "0,-2,1,3"
        assert lines[17] == "1,1,1,2"
        assert lines[-1].startswith("# crossing theta=0.66666666")

    def test_csv_to_file(self, cli_runner, diagonal_files, temp_dir):
        """Test -o writes the file and prints a summary."""
        path_a, path_m = diagonal_files
        out = temp_dir / "trace.csv"
        args = ["trace", str(path_a), str(path_m), "--kind", "S", "--steps", "16", "-o", str(out)]

        result = cli_runner.invoke(app, args)

        assert result.exit_code == 0
        assert "Kind S" in result.stdout
        assert out.read_text().count("# crossing") == 2


class TestExampleCommand:
    """Tests for inertiadiag example."""

    def test_check_passes(self, cli_runner):
        """Test every recomputed value matches."""
        result = cli_runner.invoke(app, ["example", "--check", "--steps", "128"])

        assert result.exit_code == 0
        assert "checks passed" in result.stdout

    def test_save_writes_pair(self, cli_runner, temp_dir, example_pair):
        """Test --save writes both matrices."""
        target = temp_dir / "saved"

        result = cli_runner.invoke(app, ["example", "--save", str(target), "--steps", "64"])

        assert result.exit_code == 0
        assert (target / "example_A.mtx").exists()
        assert (target / "example_M.mtx").exists()

    def test_impossible_tolerance_fails_check(self, cli_runner):
        """Test a tolerance tighter than the four reference decimals fails and exits 1."""
        result = cli_runner.invoke(app, ["example", "--check", "--tolerance", "1e-9", "--steps", "64"])

        assert result.exit_code == 1
        assert "checks failed" in result.stdout


class TestSweepCommand:
    """Tests for inertiadiag sweep."""

    def test_json_sweep(self, cli_runner):
        """Test a small seeded sweep emits summary and reports."""
        result = cli_runner.invoke(
            app, ["sweep", "--dims", "2..3", "-n", "3", "--steps", "16", "--seed", "5", "--format", "json"]
        )

        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["summary"]["cases"] == 6
        assert data["summary"]["violations"] == 0
        assert len(data["reports"]) == 6

    def test_text_sweep(self, cli_runner):
        """Test the text summary ends with the violations line."""
        result = cli_runner.invoke(app, ["sweep", "--dims", "2", "-n", "2", "--steps", "16"])

        assert result.exit_code == 0
        assert "violations: 0" in result.stdout

    def test_invalid_dims(self, cli_runner):
        """Test a reversed range exits 2."""
        result = cli_runner.invoke(app, ["sweep", "--dims", "5..2"])

        assert result.exit_code == 2

    @patch("src.cli.main.run_sweep")
    def test_violations_exit_1(self, mock_sweep, cli_runner, indefinite_pair):
        """Test any violated check exits 1."""
        a, m = indefinite_pair
        report = build_report(a, m, inputs={"generator": "test"}, steps=16)
        report.proposition_holds = False
        summary = SweepSummary()
        summary.add(report)
        mock_sweep.return_value = summary

        result = cli_runner.invoke(app, ["sweep", "--dims", "3", "-n", "1"])

        assert result.exit_code == 1
        assert "violations: 1" in result.stdout

    @patch("src.cli.main.run_sweep")
    def test_config_zero_tolerance_passed_to_sweep(self, mock_sweep, cli_runner, temp_dir):
        """Test zero_tolerance from the config file reaches the sweep."""
        mock_sweep.return_value = SweepSummary()
        config_path = temp_dir / "inertiadiag.yaml"
        config_path.write_text("zero_tolerance: 1.0e-9\n")

        result = cli_runner.invoke(app, ["--config", str(config_path), "sweep", "--dims", "2", "-n", "1"])

        assert result.exit_code == 0
        assert mock_sweep.call_args.kwargs["zero_tolerance"] == 1e-9
