"""Exact integer matrix algebra for the table identities.

Only what the tables need: multiplication, triangular summation operators
and exact inversion of unitriangular matrices by forward substitution.  No
rationals, no floating point, no general elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from . import counting, series

GENERAL = "general"
LOWER = "lower_unitriangular"
UPPER = "upper_unitriangular"


@dataclass(frozen=True)
class IntMatrix:
    entries: tuple[tuple[int, ...], ...]
    shape_tag: str = GENERAL

    def __post_init__(self):
        n = len(self.entries)
        for row in self.entries:
            if len(row) != len(self.entries[0]):
                raise ValueError("ragged matrix")
        if self.shape_tag not in (GENERAL, LOWER, UPPER):
            raise ValueError(f"unknown shape tag {self.shape_tag!r}")
        if self.shape_tag in (LOWER, UPPER):
            if not self.entries or len(self.entries[0]) != n:
                raise ValueError("unitriangular matrices must be square")
            for i in range(n):
                if self.entries[i][i] != 1:
                    raise ValueError(f"diagonal entry at {i} is not 1")
                for j in range(n):
                    off = j > i if self.shape_tag == LOWER else j < i
                    if off and self.entries[i][j] != 0:
                        raise ValueError(f"entry ({i},{j}) breaks {self.shape_tag}")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        return multiply(self, other)

    def transpose(self) -> "IntMatrix":
        tag = {LOWER: UPPER, UPPER: LOWER}.get(self.shape_tag, GENERAL)
        grid = tuple(tuple(self.entries[i][j] for i in range(self.rows))
                     for j in range(self.cols))
        return IntMatrix(grid, tag)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)


def from_rows(rows: Sequence[Sequence[int]], shape_tag: str = GENERAL) -> IntMatrix:
    return IntMatrix(tuple(tuple(r) for r in rows), shape_tag)


def identity(n: int) -> IntMatrix:
    return IntMatrix(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)),
                     LOWER if n else GENERAL)


def multiply(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.cols != b.rows:
        raise ValueError(f"dimension mismatch: {a.rows}x{a.cols} @ {b.rows}x{b.cols}")
    bt = list(zip(*b.entries))
    grid = tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a.entries
    )
    tag = a.shape_tag if a.shape_tag == b.shape_tag and a.shape_tag != GENERAL else GENERAL
    return IntMatrix(grid, tag)


def invert_unitriangular(a: IntMatrix) -> IntMatrix:
    """Exact inverse by forward substitution; rejects anything that is not
    tagged unitriangular."""
    if a.shape_tag == LOWER:
        pass
    elif a.shape_tag == UPPER:
        return invert_unitriangular(a.transpose()).transpose()
    else:
        raise ValueError("only unitriangular matrices are invertible here")
    n = a.rows
    inv = [[0] * n for _ in range(n)]
    for i in range(n):
        inv[i][i] = 1
        for k in range(i):
            coeff = a.entries[i][k]
            if coeff:
                row = inv[k]
                for j in range(k + 1):
                    inv[i][j] -= coeff * row[j]
    return IntMatrix(tuple(tuple(r) for r in inv), LOWER)


def from_cell(n: int, cell: Callable[[int, int], int], shape_tag: str = GENERAL) -> IntMatrix:
    return IntMatrix(tuple(tuple(cell(i, j) for j in range(n)) for i in range(n)), shape_tag)


# -- summation operators -------------------------------------------------

def summation_matrix(n: int, upper: bool = False) -> IntMatrix:
    """All-ones triangular matrix: right-multiplying by the upper variant
    turns a row into its running sums."""
    if upper:
        return from_cell(n, lambda i, j: 1 if j >= i else 0, UPPER)
    return from_cell(n, lambda i, j: 1 if j <= i else 0, LOWER)


def summation_inverse(n: int, upper: bool = False) -> IntMatrix:
    """Bidiagonal inverse of the summation matrix (1 on the diagonal, -1
    beside it)."""
    if upper:
        return from_cell(n, lambda i, j: 1 if i == j else (-1 if j == i + 1 else 0), UPPER)
    return from_cell(n, lambda i, j: 1 if i == j else (-1 if j == i - 1 else 0), LOWER)


# -- Toeplitz partition matrices ------------------------------------------

def partition_matrix(n: int) -> IntMatrix:
    """Lower Toeplitz matrix with entry p(i - j): every column repeats the
    partition counts shifted one row down."""
    return from_cell(n, lambda i, j: counting.p(i - j) if i >= j else 0, LOWER)


def euler_matrix(n: int) -> IntMatrix:
    """Lower Toeplitz matrix of Euler-product coefficients e(i - j); the
    exact inverse of :func:`partition_matrix`."""
    return from_cell(n, lambda i, j: series.euler_coefficient(i - j) if i >= j else 0, LOWER)


# -- the counting tables as matrices and their inverses ---------------------

def exact_parts_matrix(n: int) -> IntMatrix:
    """Partitions-into-exactly-n-parts table as a lower unitriangular matrix
    (rows m = 1..n, columns part counts 1..n)."""
    return from_cell(n, lambda i, j: counting.p_exact(i + 1, j + 1), LOWER)


def unit_diff_matrix(n: int) -> IntMatrix:
    """Unit-part difference table as a lower unitriangular matrix (rows and
    columns 0..n-1)."""
    return from_cell(n, lambda i, j: counting.unit_diff_cell(i, j), LOWER)


def inverse_exact_parts_matrix(n: int) -> IntMatrix:
    return invert_unitriangular(exact_parts_matrix(n))


def inverse_unit_diff_matrix(n: int) -> IntMatrix:
    """Inverse of the unit-diff table; also equals the lower summation
    matrix times the Euler matrix, column-shift structure included."""
    return invert_unitriangular(unit_diff_matrix(n))


def table_inverses(n: int) -> dict[str, IntMatrix]:
    return {
        "inverse-exact": inverse_exact_parts_matrix(n),
        "inverse-unit-diff": inverse_unit_diff_matrix(n),
    }


# -- partition schemes -------------------------------------------------------

def scheme_matrix(total: int) -> IntMatrix:
    """The partition scheme of ``total`` as a matrix: row i holds largest
    part total - i, column j holds part count j + 1.  Unit diagonal, zeros
    above: the only partition with largest part total - i and i + 1 parts is
    the hook (total - i, 1, ..., 1)."""
    if total < 1:
        raise ValueError("total must be >= 1")
    return from_cell(total, lambda i, j: counting.exact_frame(total - i, j + 1, total), LOWER)


def scheme_inverse(total: int) -> IntMatrix:
    return invert_unitriangular(scheme_matrix(total))
