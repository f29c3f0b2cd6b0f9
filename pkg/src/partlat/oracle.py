"""Brute-force partition enumeration under constraint records.

This module is the ground truth the recurrence implementations are checked
against, so it stays deliberately simple: plain recursive descent generating
parts largest-first, pruning only on arithmetic bounds, with every other
constraint applied as a filter on the finished partition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import Partition

PARITY_CHOICES = ("none", "all-odd", "all-even", "mixed", "distinct")

# Enumeration above this total is refused outright; the recursion is not
# built for large totals and a typo should not take down CI.
TOTAL_CAP = 80

CLASSIFIERS = (
    "exact_parts",
    "largest_part",
    "unit_count",
    "layer",
    "hook_frame",
    "parity_class",
)


@dataclass(frozen=True)
class ConstraintRecord:
    """Which partitions of ``total`` to enumerate.

    ``max_parts``/``exact_parts`` and ``max_part``/``exact_max_part`` are
    mutually exclusive pairs.  ``unit_count`` is the exact number of parts
    equal to 1.  ``layer`` and ``hook_frame`` refer to the hook (L-frame)
    decomposition of the Ferrers graph.
    """

    total: int
    max_part: int | None = None
    max_parts: int | None = None
    exact_parts: int | None = None
    exact_max_part: int | None = None
    min_part: int | None = None
    parity: str = "none"
    unit_count: int | None = None
    layer: int | None = None
    hook_frame: int | None = None

    def __post_init__(self):
        if self.total < 0:
            raise ValueError("total must be >= 0")
        if self.max_parts is not None and self.exact_parts is not None:
            raise ValueError("max_parts and exact_parts are mutually exclusive")
        if self.max_part is not None and self.exact_max_part is not None:
            raise ValueError("max_part and exact_max_part are mutually exclusive")
        for name in ("max_part", "max_parts", "exact_parts", "exact_max_part",
                     "min_part", "unit_count", "layer", "hook_frame"):
            v = getattr(self, name)
            if v is not None and v < 0:
                raise ValueError(f"{name} must be >= 0")
        if self.parity not in PARITY_CHOICES:
            raise ValueError(f"unknown parity filter {self.parity!r}")


def parity_class(parts: tuple[int, ...]) -> str:
    """'odd', 'even' or 'mixed'; the empty partition counts as 'even'."""
    odd = any(v % 2 == 1 for v in parts)
    even = any(v % 2 == 0 for v in parts)
    if odd and even:
        return "mixed"
    if odd:
        return "odd"
    return "even"


def _keeps(c: ConstraintRecord, parts: tuple[int, ...]) -> bool:
    if c.exact_max_part is not None:
        largest = parts[0] if parts else 0
        if largest != c.exact_max_part:
            return False
    if c.unit_count is not None and parts.count(1) != c.unit_count:
        return False
    if c.parity == "all-odd" and any(v % 2 == 0 for v in parts):
        return False
    if c.parity == "all-even" and any(v % 2 == 1 for v in parts):
        return False
    if c.parity == "mixed" and parity_class(parts) != "mixed":
        return False
    if c.parity == "distinct" and len(set(parts)) != len(parts):
        return False
    if c.layer is not None or c.hook_frame is not None:
        q = Partition(parts)
        if c.layer is not None and q.layer() != c.layer:
            return False
        if c.hook_frame is not None:
            if not parts or q.hook_frame_size() != c.hook_frame:
                return False
    return True


def enumerate_partitions(c: ConstraintRecord) -> list[Partition]:
    """Every matching partition, once, in decreasing lexicographic order."""
    if c.total > TOTAL_CAP:
        raise ValueError(f"total {c.total} exceeds the enumeration cap {TOTAL_CAP}")

    if c.exact_parts is not None:
        slots = c.exact_parts
        exact = True
    elif c.max_parts is not None:
        slots = c.max_parts
        exact = False
    else:
        slots = c.total
        exact = False

    hi = c.total
    if c.max_part is not None:
        hi = min(hi, c.max_part)
    if c.exact_max_part is not None:
        hi = min(hi, c.exact_max_part)
    lo = max(c.min_part or 1, 1)

    pad = slots if (c.exact_parts is not None or c.max_parts is not None) else 0
    out: list[Partition] = []

    def descend(remaining: int, bound: int, left: int, prefix: list[int]):
        if remaining == 0:
            if exact and len(prefix) != slots:
                return
            parts = tuple(prefix)
            if _keeps(c, parts):
                out.append(Partition(parts, max(pad, len(parts))))
            return
        if left == 0 or bound * left < remaining:
            return
        for v in range(min(bound, remaining), lo - 1, -1):
            prefix.append(v)
            descend(remaining - v, v, left - 1, prefix)
            prefix.pop()

    descend(c.total, hi, slots, [])
    return out


def count(c: ConstraintRecord) -> int:
    return len(enumerate_partitions(c))


def classify(c: ConstraintRecord, key: str) -> dict:
    """Bucket the matching partitions by ``key``.

    Integer-valued keys come back as a contiguous dict from the smallest to
    the largest observed value, interior zeros included.
    """
    if key not in CLASSIFIERS:
        raise ValueError(f"unknown classifier {key!r}; choose one of {CLASSIFIERS}")
    raw: dict = {}
    for q in enumerate_partitions(c):
        if key == "exact_parts":
            k = q.nonzero_count
        elif key == "largest_part":
            k = q.largest
        elif key == "unit_count":
            k = q.nonzero_parts.count(1)
        elif key == "layer":
            k = q.layer()
        elif key == "hook_frame":
            k = q.hook_frame_size() if q.nonzero_parts else 0
        else:
            k = parity_class(q.nonzero_parts)
        raw[k] = raw.get(k, 0) + 1
    if key == "parity_class" or not raw:
        return dict(sorted(raw.items()))
    lo, hi = min(raw), max(raw)
    return {k: raw.get(k, 0) for k in range(lo, hi + 1)}
