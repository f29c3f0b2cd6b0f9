"""Partitions, Ferrers matrices and multiplicity vectors.

A partition is a weakly decreasing sequence of nonnegative integers.  Zero
parts are real state here: a partition carries an explicit ``padded_length``
(the dimension of the vector it lives in), because fixed-dimension tables
and lattices need it.  Two partitions compare equal when their nonzero parts
agree, regardless of padding.

Negative part values are representable only through
:class:`MultiplicityVector` (a count vector over a shifted integer scale);
:class:`Partition` itself stays nonnegative.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class FrameError(ValueError):
    """A partition does not fit the requested rectangular frame."""


def canonicalize(values: Iterable[int], padded_length: int | None = None) -> "Partition":
    """Sort ``values`` into weakly decreasing order and zero-pad.

    This picks the sorted representative of the permutation class of a
    vector.  Negative entries are rejected: shifted-base values belong in
    :class:`MultiplicityVector`.
    """
    vals = list(values)
    for v in vals:
        if v < 0:
            raise ValueError(f"negative part {v}: use MultiplicityVector for shifted bases")
    nonzero = tuple(sorted((v for v in vals if v > 0), reverse=True))
    if padded_length is None:
        padded_length = len(vals)
    if padded_length < len(nonzero):
        raise ValueError(f"padded_length {padded_length} < {len(nonzero)} nonzero parts")
    return Partition(nonzero, padded_length)


class Partition:
    """An integer partition with explicit zero padding.

    ``parts`` is the padded tuple; equality and hashing ignore the padding
    so that orbit identity works across dimensions.
    """

    __slots__ = ("_nonzero", "_padded")

    def __init__(self, parts: Sequence[int], padded_length: int | None = None):
        parts = tuple(parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"negative part in {parts}")
        nonzero = tuple(v for v in parts if v > 0)
        if padded_length is None:
            padded_length = len(parts)
        if padded_length < len(nonzero):
            raise ValueError(f"padded_length {padded_length} < {len(nonzero)} nonzero parts")
        self._nonzero = nonzero
        self._padded = padded_length

    @property
    def parts(self) -> tuple[int, ...]:
        return self._nonzero + (0,) * (self._padded - len(self._nonzero))

    @property
    def nonzero_parts(self) -> tuple[int, ...]:
        return self._nonzero

    @property
    def padded_length(self) -> int:
        return self._padded

    @property
    def total(self) -> int:
        return sum(self._nonzero)

    @property
    def largest(self) -> int:
        return self._nonzero[0] if self._nonzero else 0

    @property
    def nonzero_count(self) -> int:
        return len(self._nonzero)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Partition):
            return self._nonzero == other._nonzero
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._nonzero)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)!r})"

    def label(self) -> str:
        """Canonical text label: concatenated digits while every part is < 10."""
        ps = self.parts
        if all(p <= 9 for p in ps):
            return "".join(str(p) for p in ps)
        return ",".join(str(p) for p in ps)

    def with_padding(self, padded_length: int) -> "Partition":
        return Partition(self._nonzero, padded_length)

    def conjugate(self) -> "Partition":
        """Column counts of the Ferrers graph (the transposed partition)."""
        cols = tuple(
            sum(1 for p in self._nonzero if p > j) for j in range(self.largest)
        )
        return Partition(cols, max(self.largest, 1))

    def to_ferrers(self, rows: int, cols: int) -> "FerrersMatrix":
        """Left-justified 0/1 matrix of the partition inside a rows x cols frame."""
        if rows < self.nonzero_count:
            raise FrameError(f"frame rows {rows} < {self.nonzero_count} nonzero parts")
        if cols < self.largest:
            raise FrameError(f"frame cols {cols} < largest part {self.largest}")
        ps = self._nonzero + (0,) * (rows - self.nonzero_count)
        grid = tuple(tuple(1 if j < ps[i] else 0 for j in range(cols)) for i in range(rows))
        return FerrersMatrix(grid)

    def box_complement(self, rows: int, cols: int) -> "Partition":
        """Complement inside the all-ones rows x cols frame, then transverse.

        The result is the partition of rows*cols - total that fills the rest
        of the box.
        """
        f = self.to_ferrers(rows, cols)
        return f.complement().transverse().to_partition()

    def to_multiplicity(self, base: int = 0) -> "MultiplicityVector":
        """Count parts of each value, over the scale base, base+1, ...

        Padding zeros count toward the value-0 slot, so the dimension of the
        result equals ``padded_length``.
        """
        ps = self.parts
        low = min(ps) if ps else base
        if low < base:
            raise ValueError(f"part {low} below base {base}")
        top = max(ps) if ps else base
        counts = [0] * (top - base + 1)
        for v in ps:
            counts[v - base] += 1
        return MultiplicityVector(base, tuple(counts))

    def norm_squared(self) -> int:
        return sum(v * v for v in self._nonzero)

    def hook_frame_size(self) -> int:
        """Units in the first row plus first column of the Ferrers graph."""
        if not self._nonzero:
            raise ValueError("hook frame of the empty partition is undefined")
        return self.largest + self.nonzero_count - 1

    def interior(self) -> "Partition":
        """Partition left after deleting the first row and first column."""
        inner = tuple(v - 1 for v in self._nonzero[1:] if v > 1)
        return Partition(inner, len(inner))

    def layer(self) -> int:
        """1 + size of the interior; 0 for the empty partition."""
        if not self._nonzero:
            return 0
        return 1 + self.interior().total


@dataclass(frozen=True)
class FerrersMatrix:
    """A 0/1 grid.  Ferrers-shaped when rows are left-justified runs of ones
    with weakly decreasing lengths; intermediate complements may violate the
    shape until transversed."""

    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for row in self.cells:
            if len(row) != len(self.cells[0]):
                raise ValueError("ragged grid")
            for v in row:
                if v not in (0, 1):
                    raise ValueError(f"cell value {v} not in {{0,1}}")

    @property
    def rows(self) -> int:
        return len(self.cells)

    @property
    def cols(self) -> int:
        return len(self.cells[0]) if self.cells else 0

    @property
    def ones_count(self) -> int:
        return sum(sum(row) for row in self.cells)

    def row_lengths(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.cells)

    def is_ferrers(self) -> bool:
        lengths = self.row_lengths()
        for row, k in zip(self.cells, lengths):
            if row[:k] != (1,) * k:
                return False
        return all(a >= b for a, b in zip(lengths, lengths[1:]))

    def transpose(self) -> "FerrersMatrix":
        grid = tuple(tuple(self.cells[i][j] for i in range(self.rows)) for j in range(self.cols))
        return FerrersMatrix(grid)

    def transverse(self) -> "FerrersMatrix":
        """Reverse both row and column order (180-degree rotation)."""
        grid = tuple(tuple(reversed(row)) for row in reversed(self.cells))
        return FerrersMatrix(grid)

    def complement(self) -> "FerrersMatrix":
        """Subtract from the all-ones frame of the same shape."""
        grid = tuple(tuple(1 - v for v in row) for row in self.cells)
        return FerrersMatrix(grid)

    def to_partition(self) -> Partition:
        if not self.is_ferrers():
            raise ValueError("grid is not Ferrers-shaped; transverse it first")
        return Partition(tuple(k for k in self.row_lengths() if k > 0), self.rows)


@dataclass(frozen=True)
class MultiplicityVector:
    """Counts of parts per value over the integer scale base, base+1, ...

    The base may be negative; the weighted sum is the represented total.
    """

    base: int
    counts: tuple[int, ...]

    def __post_init__(self):
        for c in self.counts:
            if c < 0:
                raise ValueError(f"negative count {c}")

    @property
    def dimension(self) -> int:
        return sum(self.counts)

    @property
    def weighted_sum(self) -> int:
        return sum((self.base + i) * c for i, c in enumerate(self.counts))

    def count_of(self, value: int) -> int:
        i = value - self.base
        if 0 <= i < len(self.counts):
            return self.counts[i]
        return 0

    def shift(self, s: int) -> "MultiplicityVector":
        """Same count pattern on a scale shifted by s; the weighted sum
        changes by s * dimension."""
        return MultiplicityVector(self.base + s, self.counts)


def from_multiplicity(v: MultiplicityVector) -> tuple[int, ...]:
    """Expand a multiplicity vector into its sorted (decreasing) parts.

    The result may contain negative values, so it is a plain tuple rather
    than a Partition.
    """
    parts: list[int] = []
    for i, c in enumerate(v.counts):
        parts.extend([v.base + i] * c)
    return tuple(sorted(parts, reverse=True))


def shift_base(v: MultiplicityVector, s: int) -> MultiplicityVector:
    return v.shift(s)
