"""Matrix Market reader and writer for dense symmetric matrices."""

import logging
from pathlib import Path
from typing import List, Optional, Tuple, Union

import numpy as np

from ..models.matrix import SymmetricMatrix

logger = logging.getLogger(__name__)

HEADER_BANNER = "%%MatrixMarket"

# General-header input must be symmetric to this relative tolerance unless symmetrized
ASYMMETRY_TOLERANCE = 1e-12

PathLike = Union[str, Path]


class MatrixMarketError(ValueError):
    """Raised for malformed or unsupported Matrix Market input; line and column are 1-based."""

    def __init__(self, message: str, line: int, column: int = 1, source: Optional[str] = None) -> None:
        self.line = line
        self.column = column
        self.source = source
        location = f"{source}:" if source else ""
        super().__init__(f"{location}{line}:{column}: {message}")


def _tokens(text: str) -> List[Tuple[str, int]]:
    """Whitespace-separated tokens with their 1-based start column."""
    result = []
    column = 0
    for token in text.split():
        column = text.index(token, column)
        result.append((token, column + 1))
        column += len(token)
    return result


def _parse_header(line: str, source: Optional[str]) -> Tuple[str, str]:
    tokens = _tokens(line)
    if len(tokens) != 5 or tokens[0][0] != HEADER_BANNER:
        raise MatrixMarketError(f"expected '{HEADER_BANNER} matrix <format> real <symmetry>'", 1, 1, source)

    obj, fmt, field, symmetry = (t.lower() for t, _ in tokens[1:])
    if obj != "matrix":
        raise MatrixMarketError(f"unsupported object '{obj}'", 1, tokens[1][1], source)
    if fmt not in ("array", "coordinate"):
        raise MatrixMarketError(f"unsupported format '{fmt}'", 1, tokens[2][1], source)
    if field not in ("real", "integer", "double"):
        raise MatrixMarketError(f"unsupported field '{field}' (real input only)", 1, tokens[3][1], source)
    if symmetry not in ("symmetric", "general"):
        raise MatrixMarketError(f"unsupported symmetry '{symmetry}'", 1, tokens[4][1], source)
    return fmt, symmetry


def _parse_number(token: str, line: int, column: int, source: Optional[str]) -> float:
    try:
        value = float(token)
    except ValueError:
        raise MatrixMarketError(f"invalid number '{token}'", line, column, source) from None
    if not np.isfinite(value):
        raise MatrixMarketError(f"non-finite value '{token}'", line, column, source)
    return value


def _parse_index(token: str, limit: int, line: int, column: int, source: Optional[str]) -> int:
    try:
        index = int(token)
    except ValueError:
        raise MatrixMarketError(f"invalid index '{token}'", line, column, source) from None
    if not 1 <= index <= limit:
        raise MatrixMarketError(f"index {index} outside 1..{limit}", line, column, source)
    return index - 1


def parse_matrix_market(text: str, symmetrize: bool = False, source: Optional[str] = None) -> SymmetricMatrix:
    """Parse Matrix Market text into a SymmetricMatrix.

    Accepts ``array`` and ``coordinate`` formats with ``symmetric`` or ``general``
    symmetry. General input is averaged with its transpose when ``symmetrize`` is set;
    otherwise it must already be symmetric to 1e-12 relative.

    Raises:
        MatrixMarketError: With the 1-based line and column of the problem
    """
    lines = text.splitlines()
    if not lines:
        raise MatrixMarketError("empty input", 1, 1, source)
    fmt, symmetry = _parse_header(lines[0], source)

    body = [
        (number, line)
        for number, line in enumerate(lines[1:], start=2)
        if line.strip() and not line.lstrip().startswith("%")
    ]
    if not body:
        raise MatrixMarketError("missing size line", len(lines), 1, source)

    size_line, size_text = body[0]
    size_tokens = _tokens(size_text)
    expected = 2 if fmt == "array" else 3
    if len(size_tokens) != expected:
        raise MatrixMarketError(f"size line needs {expected} integers", size_line, 1, source)
    sizes = []
    for token, column in size_tokens:
        try:
            sizes.append(int(token))
        except ValueError:
            raise MatrixMarketError(f"invalid size '{token}'", size_line, column, source) from None
    rows, cols = sizes[0], sizes[1]
    if rows < 1 or rows != cols:
        raise MatrixMarketError(f"matrix must be square and non-empty, got {rows}x{cols}", size_line, 1, source)

    n = rows
    entries = np.zeros((n, n))
    data = [(number, token, column) for number, line in body[1:] for token, column in _tokens(line)]

    if fmt == "array":
        if symmetry == "symmetric":
            positions = [(i, j) for j in range(n) for i in range(j, n)]
        else:
            positions = [(i, j) for j in range(n) for i in range(n)]
        if len(data) != len(positions):
            last = data[-1][0] if data else size_line
            raise MatrixMarketError(f"expected {len(positions)} values, found {len(data)}", last, 1, source)
        for (i, j), (number, token, column) in zip(positions, data):
            entries[i, j] = _parse_number(token, number, column, source)
    else:
        nnz = sizes[2]
        if len(data) != 3 * nnz:
            last = data[-1][0] if data else size_line
            found = len(data) / 3
            raise MatrixMarketError(f"expected {nnz} entries of 'row col value', found {found:g}", last, 1, source)
        for k in range(nnz):
            (number, row_token, row_col), (_, col_token, col_col), (_, value_token, value_col) = data[3 * k : 3 * k + 3]
            i = _parse_index(row_token, n, number, row_col, source)
            j = _parse_index(col_token, n, number, col_col, source)
            entries[i, j] = _parse_number(value_token, number, value_col, source)

    if symmetry == "symmetric":
        lower = np.tril(entries) + np.triu(entries, 1).T
        return SymmetricMatrix(lower)

    if symmetrize:
        return SymmetricMatrix.from_array(entries, symmetrize=True)

    asymmetry = float(np.max(np.abs(entries - entries.T)))
    scale = max(1.0, float(np.max(np.abs(entries))))
    if asymmetry > ASYMMETRY_TOLERANCE * scale:
        raise MatrixMarketError(
            f"general matrix is not symmetric (max |a_ij - a_ji| = {asymmetry:.3e}); use --symmetrize",
            1,
            1,
            source,
        )
    return SymmetricMatrix(entries)


def read_matrix_market(path: PathLike, symmetrize: bool = False) -> SymmetricMatrix:
    """Read a square symmetric matrix from a Matrix Market file.

    Raises:
        FileNotFoundError: If the file does not exist
        MatrixMarketError: On malformed or asymmetric input
    """
    path = Path(path)
    matrix = parse_matrix_market(path.read_text(encoding="utf-8"), symmetrize=symmetrize, source=str(path))
    logger.debug(f"Read {matrix.dim}x{matrix.dim} matrix from {path}")
    return matrix


def format_matrix_market(matrix: SymmetricMatrix, comment: Optional[str] = None) -> str:
    """``array real symmetric`` text: lower triangle in column-major order, 12 significant digits."""
    lines = [f"{HEADER_BANNER} matrix array real symmetric"]
    if comment:
        lines.extend(f"% {text}" for text in comment.splitlines())
    n = matrix.dim
    lines.append(f"{n} {n}")
    data = matrix.data
    lines.extend(format(float(data[i, j]), ".12g") for j in range(n) for i in range(j, n))
    return "\n".join(lines) + "\n"


def write_matrix_market(path: PathLike, matrix: SymmetricMatrix, comment: Optional[str] = None) -> Path:
    """Write ``matrix`` in Matrix Market array format.

    Returns:
        Path to the written file
    """
    path = Path(path)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(format_matrix_market(matrix, comment))
    logger.info(f"Wrote {matrix.dim}x{matrix.dim} matrix to {path}")
    return path
