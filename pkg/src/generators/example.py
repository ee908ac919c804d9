"""The 5×5 eigenvalue-avoidance example pair and its reference values."""

from typing import Sequence, Tuple

from ..models.matrix import SymmetricMatrix

_A = [
    [0.33, -0.05, -0.29, 0.01, 0.01],
    [-0.05, 0.36, -0.11, -0.22, -0.19],
    [-0.29, -0.11, -0.32, 0.11, -0.01],
    [0.01, -0.22, 0.11, 0.49, -0.12],
    [0.01, -0.19, -0.01, -0.12, 0.18],
]

_M = [
    [0.14, 0.10, 0.25, 0.09, -0.28],
    [0.10, -0.07, 0.02, 0.08, -0.11],
    [0.25, 0.02, 0.49, -0.11, -0.23],
    [0.09, 0.08, -0.11, 0.24, -0.34],
    [-0.28, -0.11, -0.23, -0.34, 0.35],
]

# Reference values, printed to four decimals
EIGENVALUES_A = (-0.4553, -0.0346, 0.3949, 0.4560, 0.6791)
EIGENVALUES_M = (-0.1464, -0.1216, -0.0252, 0.5174, 0.9258)
# Eigenvalues of A⁻¹M, the reciprocals of the M⁻¹A spectrum
PENCIL_RECIPROCALS = (-2.4405, -0.2468, -0.0506, complex(1.7245, -0.8315), complex(1.7245, 0.8315))
# Singular points of T(θ) = (1-θ)A + θM
T_CROSSING_THETAS = (0.2907, 0.8021, 0.9518)
COUNTS = {"p": 3, "n": 2, "r": -1, "s": 1, "t": 0}
T_CROSSINGS = 3
S_CROSSINGS = 0


def avoidance_example() -> Tuple[SymmetricMatrix, SymmetricMatrix]:
    """Return (A, M): A has inertia (3, 0, 2), M has (2, 0, 3), M⁻¹A has three negative reals."""
    return SymmetricMatrix(_A), SymmetricMatrix(_M)


def reciprocal_spectrum(eigenvalues: Sequence[complex]) -> Tuple[complex, ...]:
    """1/λ for each eigenvalue of M⁻¹A, ordered by real then imaginary part.

    These are the eigenvalues of A⁻¹M, the form in which the reference spectrum is listed.
    """
    reciprocals = [1.0 / complex(value) for value in eigenvalues]
    return tuple(sorted(reciprocals, key=lambda z: (round(z.real, 8), z.imag)))
