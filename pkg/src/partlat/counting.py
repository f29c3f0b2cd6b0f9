"""Closed recurrences and classification tables for partition counts.

Everything here is computed by memoized recurrences, independently of the
brute-force oracle that validates it.  Two printed recurrences in the source
tables this library reproduces are wrong as stated and are replaced by
corrected forms (see :mod:`partlat.errata`):

* the exactly-N-parts recurrence needs second term ``p_exact(M - N, N)``,
  not ``M - N - 1``;
* the box recurrence ``p_box(m-1,n,M) + p_box(m,n-1,M)`` double counts; the
  disjoint split used here conditions on whether all ``n`` part slots are
  nonzero.
"""

from __future__ import annotations

from functools import cache

from .partitions import Partition
from .tables import CountTable, grid_table


# -- base counts ---------------------------------------------------------

@cache
def p_exact(total: int, parts: int) -> int:
    """Partitions of ``total`` into exactly ``parts`` positive parts."""
    if total < 0 or parts < 0:
        return 0
    if parts == 0:
        return 1 if total == 0 else 0
    if total < parts:
        return 0
    return p_exact(total - 1, parts - 1) + p_exact(total - parts, parts)


@cache
def p(total: int) -> int:
    """Unrestricted partition count, by the pentagonal-number recurrence."""
    if total < 0:
        return 0
    if total == 0:
        return 1
    acc = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > total:
            break
        sign = 1 if k % 2 == 1 else -1
        acc += sign * p(total - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= total:
            acc += sign * p(total - g2)
        k += 1
    return acc


def p_row_sum(total: int) -> int:
    """Unrestricted partition count as a sum over exact part counts."""
    if total < 0:
        return 0
    return sum(p_exact(total, n) for n in range(total + 1))


@cache
def p_atmost(total: int, parts: int) -> int:
    """Partitions of ``total`` into at most ``parts`` parts.

    Stabilizes at p(total) once ``parts >= total``: adding more zero slots
    changes nothing.
    """
    if total < 0 or parts < 0:
        return 0
    if parts == 0:
        return 1 if total == 0 else 0
    return p_atmost(total, parts - 1) + p_atmost(total - parts, parts)


@cache
def p_box(max_part: int, max_parts: int, total: int) -> int:
    """Partitions of ``total`` with parts <= max_part and at most
    ``max_parts`` of them (orbits inside a box)."""
    if total < 0:
        return 0
    if total == 0:
        return 1
    if max_part == 0 or max_parts == 0:
        return 0
    # Disjoint split: fewer than max_parts nonzero parts, or exactly
    # max_parts of them (then strip one unit from every part).
    return p_box(max_part, max_parts - 1, total) + p_box(max_part - 1, max_parts, total - max_parts)


def exact_frame(largest: int, parts: int, total: int) -> int:
    """Partitions of ``total`` with largest part exactly ``largest`` and
    exactly ``parts`` parts.

    The hook (first row plus first column) eats largest+parts-1 units; the
    rest is free inside the (largest-1) x (parts-1) box.
    """
    if largest == 0 or parts == 0:
        return 1 if largest == 0 and parts == 0 and total == 0 else 0
    free = total - largest - parts + 1
    if free < 0:
        return 0
    return p_box(largest - 1, parts - 1, free)


def p_with_largest(largest: int, total: int) -> int:
    """Partitions of ``total`` whose largest part is exactly ``largest``
    (row sums of the partition scheme)."""
    if largest == 0:
        return 1 if total == 0 else 0
    return sum(exact_frame(largest, n, total) for n in range(1, total + 1))


def p_with_parts(parts: int, total: int) -> int:
    """Partitions of ``total`` into exactly ``parts`` parts, summed over the
    largest part (column sums of the partition scheme)."""
    if parts == 0:
        return 1 if total == 0 else 0
    return sum(exact_frame(m, parts, total) for m in range(1, total + 1))


def p_min_part(total: int, parts: int, min_part: int) -> int:
    """Partitions of ``total`` into exactly ``parts`` parts, each >= min_part.

    Shifting every part by 1 - min_part is a bijection onto ordinary
    partitions into exactly ``parts`` positive parts, for any integer
    ``min_part`` (negative bases included).
    """
    if parts < 0:
        return 0
    return p_exact(total - parts * (min_part - 1), parts)


# -- parity and distinct parts -------------------------------------------

def odd_part_count(total: int, parts: int) -> int:
    """Partitions of ``total`` into exactly ``parts`` odd parts."""
    if (total + parts) % 2 == 1:
        return 0
    return p_exact((total + parts) // 2, parts)


def odd_even_mixed(total: int) -> tuple[int, int, int, int]:
    """(all-odd, all-even, mixed, total) partition counts."""
    odd = sum(odd_part_count(total, j) for j in range(1, total + 1))
    even = p(total // 2) if total % 2 == 0 else 0
    rest = p(total) - odd - even
    return odd, even, rest, p(total)


def odd_even_mixed_table(max_total: int) -> CountTable:
    cols: list = list(range(1, max_total + 1)) + ["odd", "even", "mixed", "p"]
    cells = []
    for m in range(1, max_total + 1):
        row = [odd_part_count(m, j) for j in range(1, max_total + 1)]
        cells.append(tuple(row) + odd_even_mixed(m))
    return CountTable("odd-even-mixed", "m", "n", tuple(range(1, max_total + 1)),
                      tuple(cols), tuple(cells), show_sums=False)


@cache
def distinct_exact(total: int, parts: int) -> int:
    """Partitions of ``total`` into exactly ``parts`` distinct parts."""
    if parts < 0 or total < 0:
        return 0
    if parts == 0:
        return 1 if total == 0 else 0
    if total < parts * (parts + 1) // 2:
        return 0
    # Strip one unit from every part: parts stay distinct, the smallest may hit zero.
    return distinct_exact(total - parts, parts) + distinct_exact(total - parts, parts - 1)


def distinct_row(total: int) -> tuple[tuple[int, ...], int]:
    """Distinct-part counts of ``total`` by part count, and the signed
    difference (#odd part counts) - (#even part counts)."""
    kmax = 0
    while (kmax + 1) * (kmax + 2) // 2 <= total:
        kmax += 1
    counts = tuple(distinct_exact(total, k) for k in range(1, kmax + 1))
    diff = sum(c if k % 2 == 1 else -c for k, c in enumerate(counts, start=1))
    return counts, diff


def distinct_table(max_total: int) -> CountTable:
    kmax = 0
    while (kmax + 1) * (kmax + 2) // 2 <= max_total:
        kmax += 1
    cols: list = list(range(1, kmax + 1)) + ["total", "difference"]
    cells = []
    for m in range(1, max_total + 1):
        counts, diff = distinct_row(m)
        padded = counts + (0,) * (kmax - len(counts))
        cells.append(padded + (sum(counts), diff))
    return CountTable("distinct", "m", "n", tuple(range(1, max_total + 1)),
                      tuple(cols), tuple(cells), show_sums=False)


# -- unit-part differences -------------------------------------------------

@cache
def unit_diff_cell(total: int, units: int) -> int:
    """Partitions of ``total`` with exactly ``units`` parts equal to 1."""
    if total < 0 or units < 0 or units > total:
        return 0
    if units == 0:
        return p(total) - p(total - 1)
    return unit_diff_cell(total - 1, units - 1)


def unit_diff_table(max_total: int) -> CountTable:
    return grid_table("unit-diff", "m", "n",
                      range(max_total + 1), range(max_total + 1), unit_diff_cell)


# -- trapezoid blocks ------------------------------------------------------

def franklin_trapezoids(k: int) -> tuple[Partition, Partition]:
    """The two minimal k-row trapezoids with consecutive parts differing by
    one; their sizes are the generalized pentagonal pair
    (k(3k-1)/2, k(3k+1)/2)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    first = Partition(tuple(range(2 * k - 1, k - 1, -1)))
    second = Partition(tuple(range(2 * k, k, -1)))
    return first, second


# -- neighbor counts --------------------------------------------------------

def neighbor_total(total: int) -> int:
    """Number of one-unit exchange edges that increase the nonzero part
    count, summed over all partitions of ``total``: equals
    p(0) + p(1) + ... + p(total - 2)."""
    return sum(p(k) for k in range(0, total - 1))


def right_hand_neighbor_table(max_total: int) -> CountTable:
    """Edge counts between adjacent part-count columns of the one-unit
    exchange lattice, per total m = 2..max_total."""
    if max_total < 2:
        raise ValueError("max_total must be >= 2")
    from . import lattices  # deferred: lattices sits above this module

    rows = tuple(range(2, max_total + 1))
    cols = tuple(range(1, max_total))
    cells = []
    for m in rows:
        counts = lattices.column_edge_counts(m)
        cells.append(tuple(counts) + (0,) * (len(cols) - len(counts)))
    return CountTable("neighbors", "m", "n", rows, cols, tuple(cells))


def neighbor_difference_row(total: int) -> tuple[int, ...]:
    """Difference between consecutive neighbor-table rows (m and m-1)."""
    from . import lattices

    cur = lattices.column_edge_counts(total)
    prev = lattices.column_edge_counts(total - 1)
    prev = tuple(prev) + (0,) * (len(cur) - len(prev))
    return tuple(a - b for a, b in zip(cur, prev))


# -- hook layers -------------------------------------------------------------

@cache
def hook_layer_count(frame: int, interior_total: int) -> int:
    """Partitions whose hook frame has ``frame`` units and whose interior
    partitions ``interior_total``: sum over the first-row length r of the
    interior counts inside the (r-1) x (frame-r) box."""
    if frame < 1:
        return 0
    return sum(p_box(r - 1, frame - r, interior_total) for r in range(1, frame + 1))


def layer_count(total: int, layer: int) -> int:
    """Partitions of ``total`` in the given layer (1 + interior size)."""
    if layer < 1 or layer > total:
        return 0
    return hook_layer_count(total - layer + 1, layer - 1)


def layer_table(max_total: int) -> CountTable:
    if max_total < 1:
        raise ValueError("max_total must be >= 1")
    kmax = max(
        k for k in range(1, max_total + 1)
        if any(layer_count(n, k) for n in range(1, max_total + 1))
    )
    return grid_table("layers", "n", "k",
                      range(1, max_total + 1), range(1, kmax + 1), layer_count)


def diagonal_sum(frame: int) -> int:
    """Total number of partitions (of any size) with the given hook frame."""
    if frame < 1:
        raise ValueError("frame must be >= 1")
    top = max(((frame + 1) // 2 - 1) * (frame - (frame + 1) // 2), 0)
    return sum(hook_layer_count(frame, t) for t in range(top + 1))


def diagonal_power_law(frame: int) -> bool:
    """Check diagonal_sum(frame) == 2**(frame-1).  Verified here for small
    frames; stated in the source as a conjecture for all of them."""
    return diagonal_sum(frame) == 2 ** (frame - 1)


def binomial_row(size: int) -> tuple[int, ...]:
    """For hook frame ``size``, the partition counts by largest part k
    (largest exactly k, exactly size-k+1 parts, any total).  These come out
    as the binomial coefficients C(size-1, k-1)."""
    if size < 1:
        raise ValueError("size must be >= 1")
    row = []
    for k in range(1, size + 1):
        parts = size - k + 1
        row.append(sum(exact_frame(k, parts, t) for t in range(size, k * parts + 1)))
    return tuple(row)


def binomial_table(max_size: int) -> CountTable:
    def cell(r, k):
        return binomial_row(r)[k - 1] if k <= r else 0

    return grid_table("binomial", "r", "k",
                      range(1, max_size + 1), range(1, max_size + 1), cell)


# -- the classic table pair ---------------------------------------------------

def exact_table(max_total: int) -> CountTable:
    return grid_table("exact", "m", "n",
                      range(max_total + 1), range(max_total + 1), lambda m, n: p_exact(m, n))


def atmost_table(max_total: int) -> CountTable:
    return grid_table("atmost", "m", "n",
                      range(max_total + 1), range(max_total + 1),
                      lambda m, n: p_atmost(m, n), show_sums=False)


def box_table(edge: int, dim: int) -> CountTable:
    """Counts of partitions in cubes: rows are totals, columns edge sizes
    0..edge, each column counting inside the (e x dim) box."""
    return grid_table("box", "m", "edge",
                      range(edge * dim + 1), range(edge + 1),
                      lambda m, e: p_box(e, dim, m), show_sums=False)
