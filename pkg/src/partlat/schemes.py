"""Partition schemes: exact-frame counts laid out by largest part and
number of nonzero parts.

Rows run from the largest part downwards, so the scheme is symmetric about
its transversal (conjugation swaps the two axes) and, read as a matrix,
lower unitriangular, hence exactly invertible.
"""

from __future__ import annotations

from . import counting
from .tables import CountTable


def build_scheme(total: int) -> CountTable:
    """Scheme table of ``total``: rows m1 = total..1, columns n = 1..total;
    the cell counts partitions with largest part m1 and exactly n parts."""
    if total < 1:
        raise ValueError("total must be >= 1")
    rows = tuple(range(total, 0, -1))
    cols = tuple(range(1, total + 1))
    cells = tuple(
        tuple(counting.exact_frame(m1, n, total) for n in cols) for m1 in rows
    )
    return CountTable("scheme", "m1", "n", rows, cols, cells)
