"""Content hashing for matrices named in diagnostics."""

import hashlib
import json
from typing import Any

import numpy as np

# Hex characters kept in messages
HASH_PREFIX_LENGTH = 16


def compute_matrix_hash(matrix: Any) -> str:
    """Compute a stable SHA256 digest of a dense matrix.

    The array is normalized to contiguous float64 (with -0.0 folded into 0.0) and the
    shape is hashed with it, so equal matrices always produce the same digest.

    Args:
        matrix: Anything numpy can turn into a 2-D float array, or an object with ``.data``

    Returns:
        16-character hex prefix of the SHA256 digest
    """
    array = np.ascontiguousarray(getattr(matrix, "data", matrix), dtype=np.float64) + 0.0

    digest = hashlib.sha256()
    digest.update(json.dumps(list(array.shape)).encode())
    digest.update(array.tobytes())
    return digest.hexdigest()[:HASH_PREFIX_LENGTH]
