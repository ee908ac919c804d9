"""Test-problem generators."""

from .errors import GeneratorError
from .example import avoidance_example
from .random_matrices import (
    case_rng,
    random_full_rank,
    random_orthogonal,
    random_pair,
    random_spd,
    random_sym_with_inertia,
)
from .saddle import block_diag_preconditioner, constraint_preconditioner, saddle_point

__all__ = [
    "GeneratorError",
    "avoidance_example",
    "case_rng",
    "random_orthogonal",
    "random_sym_with_inertia",
    "random_spd",
    "random_full_rank",
    "random_pair",
    "saddle_point",
    "constraint_preconditioner",
    "block_diag_preconditioner",
]
