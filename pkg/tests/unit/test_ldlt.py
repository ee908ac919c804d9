"""Unit tests for the Bunch-Kaufman LDLᵀ factorization and inertia counts."""

import numpy as np
import pytest

from src.kernel import ParameterError, SingularMatrixError, ldlt_factor, ldlt_inertia, ldlt_solve, negative_count
from src.models.matrix import SymmetricMatrix
from src.models.spectrum import Inertia
from tests.helpers import random_symmetric


def _reconstruct(matrix: SymmetricMatrix):
    factorization = ldlt_factor(matrix)
    perm = factorization.permutation
    permuted = matrix.data[np.ix_(perm, perm)]
    product = factorization.lower @ factorization.diagonal @ factorization.lower.T
    return permuted, product


class TestLdltFactor:
    """Tests for ldlt_factor."""

    def test_reconstructs_permuted_matrix(self, rng):
        """Test P·A·Pᵀ = L·D·Lᵀ on random indefinite matrices."""
        for dim in (1, 2, 4, 7, 10):
            permuted, product = _reconstruct(random_symmetric(rng, dim))
            np.testing.assert_allclose(product, permuted, atol=1e-12)

    def test_lower_is_unit_lower_triangular(self, rng):
        """Test L has a unit diagonal and nothing above it."""
        factorization = ldlt_factor(random_symmetric(rng, 6))

        np.testing.assert_array_equal(np.diag(factorization.lower), np.ones(6))
        np.testing.assert_array_equal(np.triu(factorization.lower, 1), np.zeros((6, 6)))

    def test_zero_diagonal_takes_two_by_two_pivot(self):
        """Test [[0, 1], [1, 0]] is factored with one 2×2 block."""
        factorization = ldlt_factor(SymmetricMatrix([[0.0, 1.0], [1.0, 0.0]]))

        assert factorization.block_structure == [2]
        np.testing.assert_allclose(factorization.block_values[0], (-1.0, 1.0))
        assert factorization.inertia() == Inertia(pos=1, zero=0, neg=1)

    def test_dominant_diagonal_uses_one_by_one_pivots(self):
        """Test a diagonally dominant matrix needs no 2×2 pivots."""
        matrix = SymmetricMatrix([[4.0, 1.0, 0.0], [1.0, -5.0, 1.0], [0.0, 1.0, 6.0]])

        factorization = ldlt_factor(matrix)

        assert factorization.block_structure == [1, 1, 1]

    def test_exact_zero_column_recorded_as_zero_pivot(self):
        """Test a zero row/column finishes with a zero 1×1 block."""
        factorization = ldlt_factor(SymmetricMatrix.diagonal([1.0, 0.0, -1.0]))

        assert factorization.inertia() == Inertia(pos=1, zero=1, neg=1)

    def test_negative_tolerance_rejected(self):
        """Test a negative zero tolerance is a parameter error."""
        with pytest.raises(ParameterError):
            ldlt_factor(SymmetricMatrix.identity(2), zero_tolerance=-1.0)


class TestLdltInertia:
    """Tests for ldlt_inertia and negative_count."""

    def test_matches_eigenvalue_signs(self, rng):
        """Test inertia equals the sign counts of LAPACK eigenvalues on 500 random matrices."""
        for _ in range(500):
            dim = int(rng.integers(1, 9))
            matrix = random_symmetric(rng, dim)
            _, inertia = ldlt_inertia(matrix)

            values = np.linalg.eigvalsh(matrix.data)
            assert inertia == Inertia.from_values(values, 0.0)

    def test_rank_deficient_matrix(self):
        """Test v·vᵀ has inertia (1, n-1, 0)."""
        v = np.array([1.0, 2.0, -1.0])
        _, inertia = ldlt_inertia(SymmetricMatrix(np.outer(v, v)))

        assert inertia == Inertia(pos=1, zero=2, neg=0)

    def test_zero_matrix(self):
        """Test the zero matrix has all-zero inertia."""
        _, inertia = ldlt_inertia(SymmetricMatrix(np.zeros((3, 3))))

        assert inertia == Inertia(pos=0, zero=3, neg=0)

    def test_inertia_sums_to_dimension(self, rng):
        """Test p + z + n = dim."""
        matrix = random_symmetric(rng, 8)
        _, inertia = ldlt_inertia(matrix)

        assert inertia.dim == 8

    def test_negated_matrix_swaps_counts(self, rng):
        """Test inertia(-A) swaps the positive and negative counts."""
        matrix = random_symmetric(rng, 6)
        _, inertia = ldlt_inertia(matrix)
        _, negated = ldlt_inertia(-matrix)

        assert negated == inertia.negated()

    def test_congruence_preserves_inertia(self, rng):
        """Test Sylvester's law: X·A·Xᵀ has the inertia of A for invertible X."""
        matrix = SymmetricMatrix.diagonal([2.0, -1.0, 0.5, -3.0, 1.0])
        x = rng.standard_normal((5, 5)) + 5.0 * np.eye(5)

        _, inertia = ldlt_inertia(SymmetricMatrix(x @ matrix.data @ x.T))

        assert inertia == Inertia(pos=3, zero=0, neg=2)

    def test_negative_count(self):
        """Test negative_count uses strict pivot signs."""
        assert negative_count(SymmetricMatrix.diagonal([-1.0, -2.0, 3.0])) == 2
        assert negative_count(SymmetricMatrix.diagonal([1e-300, 1.0])) == 0


class TestLdltSolve:
    """Tests for ldlt_solve."""

    def test_vector_right_hand_side(self, rng):
        """Test the solve matches numpy.linalg.solve."""
        matrix = random_symmetric(rng, 6)
        rhs = rng.standard_normal(6)

        x = ldlt_solve(ldlt_factor(matrix), rhs)

        np.testing.assert_allclose(matrix.data @ x, rhs, atol=1e-10)

    def test_block_right_hand_side(self, rng):
        """Test an n×k block of right-hand sides."""
        matrix = random_symmetric(rng, 5)
        rhs = rng.standard_normal((5, 3))

        x = ldlt_solve(ldlt_factor(matrix), rhs)

        assert x.shape == (5, 3)
        np.testing.assert_allclose(matrix.data @ x, rhs, atol=1e-10)

    def test_two_by_two_pivot_solve(self):
        """Test solving through a 2×2 pivot block."""
        matrix = SymmetricMatrix([[0.0, 2.0, 1.0], [2.0, 0.0, 0.0], [1.0, 0.0, 3.0]])
        rhs = np.array([1.0, 2.0, 3.0])

        x = ldlt_solve(ldlt_factor(matrix), rhs)

        np.testing.assert_allclose(matrix.data @ x, rhs, atol=1e-13)

    def test_singular_matrix_raises_with_pivot_index(self):
        """Test a zero pivot raises SingularMatrixError naming the pivot."""
        factorization = ldlt_factor(SymmetricMatrix.diagonal([1.0, 0.0, 2.0]))

        with pytest.raises(SingularMatrixError) as exc_info:
            ldlt_solve(factorization, np.ones(3))

        assert exc_info.value.pivot_index == 1

    def test_shape_mismatch_rejected(self):
        """Test a right-hand side of the wrong length."""
        with pytest.raises(ParameterError):
            ldlt_solve(ldlt_factor(SymmetricMatrix.identity(3)), np.ones(2))
