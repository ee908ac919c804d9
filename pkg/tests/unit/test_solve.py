"""Unit tests for linear solves and the SPD square root."""

import numpy as np
import pytest

from src.generators import random_spd
from src.kernel import NotPositiveDefiniteError, ParameterError, SingularMatrixError, solve_linear, spd_sqrt
from src.models.matrix import DenseMatrix, SymmetricMatrix
from tests.helpers import random_symmetric


class TestSolveLinear:
    """Tests for solve_linear."""

    def test_symmetric_path(self, rng):
        """Test a symmetric indefinite system."""
        matrix = random_symmetric(rng, 7)
        rhs = rng.standard_normal(7)

        x = solve_linear(matrix, rhs)

        np.testing.assert_allclose(x, np.linalg.solve(matrix.data, rhs), rtol=1e-9, atol=1e-10)

    def test_nonsymmetric_path(self, rng):
        """Test pivoted elimination on a general matrix."""
        g = rng.standard_normal((6, 6))
        rhs = rng.standard_normal(6)

        x = solve_linear(DenseMatrix(g), rhs)

        np.testing.assert_allclose(g @ x, rhs, atol=1e-10)

    def test_block_right_hand_side(self, rng):
        """Test an n×k right-hand side through elimination."""
        g = rng.standard_normal((4, 4))
        rhs = rng.standard_normal((4, 2))

        x = solve_linear(DenseMatrix(g), rhs)

        np.testing.assert_allclose(g @ x, rhs, atol=1e-10)

    def test_elimination_needs_row_swap(self):
        """Test a zero leading entry is handled by pivoting."""
        g = DenseMatrix([[0.0, 1.0], [1.0, 0.0]])

        x = solve_linear(g, np.array([2.0, 3.0]))

        np.testing.assert_allclose(x, [3.0, 2.0])

    def test_singular_nonsymmetric_names_pivot(self):
        """Test a singular general matrix raises with the failing pivot index."""
        g = DenseMatrix([[1.0, 2.0], [2.0, 4.0]])

        with pytest.raises(SingularMatrixError) as exc_info:
            solve_linear(g, np.ones(2))

        assert exc_info.value.pivot_index == 1

    def test_singular_symmetric(self):
        """Test a singular symmetric matrix raises SingularMatrixError."""
        with pytest.raises(SingularMatrixError):
            solve_linear(SymmetricMatrix([[1.0, 1.0], [1.0, 1.0]]), np.ones(2))

    def test_rectangular_rejected(self):
        """Test a nonsquare matrix is refused."""
        with pytest.raises(ParameterError):
            solve_linear(DenseMatrix(np.ones((2, 3))), np.ones(2))

    def test_rhs_length_rejected(self):
        """Test a mismatched right-hand side is refused."""
        with pytest.raises(ParameterError):
            solve_linear(SymmetricMatrix.identity(3), np.ones(4))


class TestSpdSqrt:
    """Tests for spd_sqrt."""

    def test_square_reproduces_matrix(self):
        """Test S·S = M for random SPD matrices."""
        for seed in range(10):
            m = random_spd(6, seed)
            root = spd_sqrt(m)

            np.testing.assert_allclose(root.data @ root.data, m.data, atol=1e-10 * (1.0 + m.max_abs()))

    def test_root_is_positive_definite(self):
        """Test the principal root has positive eigenvalues."""
        root = spd_sqrt(random_spd(5, 3))

        assert np.all(np.linalg.eigvalsh(root.data) > 0.0)

    def test_diagonal_root(self):
        """Test the root of diag(4, 9) is diag(2, 3)."""
        root = spd_sqrt(SymmetricMatrix.diagonal([4.0, 9.0]))

        np.testing.assert_allclose(root.data, np.diag([2.0, 3.0]), atol=1e-15)

    def test_indefinite_rejected(self):
        """Test an indefinite matrix raises NotPositiveDefiniteError with its inertia."""
        with pytest.raises(NotPositiveDefiniteError) as exc_info:
            spd_sqrt(SymmetricMatrix.diagonal([1.0, -1.0]))

        assert exc_info.value.inertia.neg == 1

    def test_singular_rejected(self):
        """Test a positive semidefinite matrix is refused."""
        with pytest.raises(NotPositiveDefiniteError):
            spd_sqrt(SymmetricMatrix.diagonal([1.0, 0.0]))
