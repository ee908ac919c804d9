"""Unit tests for Matrix Market input and output."""

import numpy as np
import pytest

from src.models.matrix import SymmetricMatrix
from src.utils.matrix_market import (
    MatrixMarketError,
    format_matrix_market,
    parse_matrix_market,
    read_matrix_market,
    write_matrix_market,
)


class TestParseMatrixMarket:
    """Tests for parse_matrix_market."""

    def test_symmetric_coordinate(self, matrix_market_text):
        """Test a symmetric coordinate file fills both triangles."""
        matrix = parse_matrix_market(matrix_market_text)

        expected = [[2.0, -1.0, 0.0], [-1.0, 2.0, -1.0], [0.0, -1.0, 2.0]]
        np.testing.assert_array_equal(matrix.data, expected)

    def test_symmetric_array(self):
        """Test array format lists the lower triangle column by column."""
        text = "%%MatrixMarket matrix array real symmetric\n2 2\n1.0\n3.0\n5.0\n"

        matrix = parse_matrix_market(text)

        np.testing.assert_array_equal(matrix.data, [[1.0, 3.0], [3.0, 5.0]])

    def test_general_array_column_major(self):
        """Test a symmetric general array is accepted as is."""
        text = "%%MatrixMarket matrix array real general\n2 2\n1\n2\n2\n4\n"

        matrix = parse_matrix_market(text)

        np.testing.assert_array_equal(matrix.data, [[1.0, 2.0], [2.0, 4.0]])

    def test_general_asymmetric_rejected(self):
        """Test an asymmetric general matrix needs symmetrize."""
        text = "%%MatrixMarket matrix array real general\n2 2\n1\n2\n4\n4\n"

        with pytest.raises(MatrixMarketError, match="not symmetric"):
            parse_matrix_market(text)

    def test_general_asymmetric_symmetrized(self):
        """Test symmetrize averages a_ij and a_ji."""
        text = "%%MatrixMarket matrix array real general\n2 2\n1\n2\n4\n4\n"

        matrix = parse_matrix_market(text, symmetrize=True)

        assert matrix.data[0, 1] == 3.0

    def test_comments_and_blank_lines_skipped(self):
        """Test comment lines anywhere after the header are ignored."""
        text = "%%MatrixMarket matrix coordinate real general\n% c\n\n1 1 1\n% mid\n1 1 7.5\n"

        assert parse_matrix_market(text).data[0, 0] == 7.5

    def test_header_case_insensitive(self):
        """Test the qualifiers are case-insensitive."""
        text = "%%MatrixMarket MATRIX Array REAL Symmetric\n1 1\n2\n"

        assert parse_matrix_market(text).dim == 1

    def test_bad_header(self):
        """Test a missing banner reports line 1."""
        with pytest.raises(MatrixMarketError) as exc_info:
            parse_matrix_market("matrix array real symmetric\n1 1\n2\n")

        assert exc_info.value.line == 1

    def test_unsupported_field_column(self):
        """Test complex input names the offending column."""
        with pytest.raises(MatrixMarketError) as exc_info:
            parse_matrix_market("%%MatrixMarket matrix array complex symmetric\n1 1\n2 0\n", source="a.mtx")

        assert exc_info.value.line == 1
        assert exc_info.value.column == 29
        assert str(exc_info.value).startswith("a.mtx:1:29:")

    def test_invalid_number_location(self, matrix_market_text):
        """Test a malformed value reports its line and column."""
        text = matrix_market_text.replace("2 2 2.0", "2 2 abc")

        with pytest.raises(MatrixMarketError) as exc_info:
            parse_matrix_market(text)

        assert (exc_info.value.line, exc_info.value.column) == (6, 5)

    def test_index_out_of_range(self, matrix_market_text):
        """Test an index beyond the dimension."""
        text = matrix_market_text.replace("3 3 2.0", "4 3 2.0")

        with pytest.raises(MatrixMarketError, match="outside 1..3"):
            parse_matrix_market(text)

    def test_entry_count_mismatch(self):
        """Test too few coordinate entries."""
        text = "%%MatrixMarket matrix coordinate real symmetric\n2 2 3\n1 1 1.0\n2 2 1.0\n"

        with pytest.raises(MatrixMarketError, match="expected 3 entries"):
            parse_matrix_market(text)

    def test_nonsquare_rejected(self):
        """Test a rectangular size line."""
        with pytest.raises(MatrixMarketError, match="square"):
            parse_matrix_market("%%MatrixMarket matrix array real general\n2 3\n1\n2\n3\n4\n5\n6\n")

    def test_empty_input(self):
        """Test empty text."""
        with pytest.raises(MatrixMarketError, match="empty"):
            parse_matrix_market("")


class TestWriteMatrixMarket:
    """Tests for format_matrix_market and write_matrix_market."""

    def test_format_layout(self):
        """Test banner, comment, size line and lower-triangle values."""
        text = format_matrix_market(SymmetricMatrix([[1.0, 2.0], [2.0, 0.1]]), comment="pair A")

        assert text == "%%MatrixMarket matrix array real symmetric\n% pair A\n2 2\n1\n2\n0.1\n"

    def test_file_reads_back(self, temp_dir, example_pair):
        """Test a written file reproduces the matrix to 12 significant digits."""
        a, _ = example_pair
        path = write_matrix_market(temp_dir / "A.mtx", a)

        matrix = read_matrix_market(path)

        np.testing.assert_allclose(matrix.data, a.data, rtol=1e-12)

    def test_read_missing_file(self, temp_dir):
        """Test a missing file raises FileNotFoundError."""
        with pytest.raises(FileNotFoundError):
            read_matrix_market(temp_dir / "missing.mtx")

    def test_read_reports_source(self, temp_dir):
        """Test file errors carry the path."""
        path = temp_dir / "bad.mtx"
        path.write_text("%%MatrixMarket matrix array real symmetric\n1 1\nx\n")

        with pytest.raises(MatrixMarketError) as exc_info:
            read_matrix_market(path)

        assert exc_info.value.source == str(path)
        assert exc_info.value.line == 3
