"""Truncated formal power series with exact integer coefficients.

All series are finite coefficient vectors c_0..c_T for an explicit
truncation order T; arithmetic never reads past T, and operations on
mismatched orders truncate to the smaller one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Iterable, Sequence


@dataclass(frozen=True)
class TruncatedSeries:
    coefficients: tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a series carries at least the constant term")

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[int], order: int | None = None) -> "TruncatedSeries":
        c = list(coeffs)
        if order is not None:
            c = (c + [0] * (order + 1))[: order + 1]
        return cls(tuple(c))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls((1,) + (0,) * order)

    @classmethod
    def geometric(cls, step: int, order: int, reps: int | None = None) -> "TruncatedSeries":
        """1 + t^step + t^(2*step) + ... up to ``reps`` repetitions (all that
        fit when reps is None)."""
        if step < 1:
            raise ValueError("step must be >= 1")
        c = [0] * (order + 1)
        j = 0
        while j * step <= order and (reps is None or j <= reps):
            c[j * step] = 1
            j += 1
        return cls(tuple(c))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n: int) -> int:
        return self.coefficients[n]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        T = min(self.order, other.order)
        return TruncatedSeries(tuple(self[i] + other[i] for i in range(T + 1)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        T = min(self.order, other.order)
        return TruncatedSeries(tuple(self[i] - other[i] for i in range(T + 1)))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        T = min(self.order, other.order)
        out = [0] * (T + 1)
        for i, a in enumerate(self.coefficients[: T + 1]):
            if a == 0:
                continue
            for j in range(T + 1 - i):
                b = other.coefficients[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(tuple(out))

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse up to the truncation order.

        Needs a unit constant term (+1 or -1) so the inverse stays integral.
        """
        c0 = self.coefficients[0]
        if c0 not in (1, -1):
            raise ValueError(f"constant term {c0} is not a unit")
        T = self.order
        inv = [0] * (T + 1)
        inv[0] = c0
        for n in range(1, T + 1):
            s = sum(self.coefficients[k] * inv[n - k] for k in range(1, n + 1))
            inv[n] = -c0 * s
        return TruncatedSeries(tuple(inv))

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries.from_coefficients(self.coefficients, order)


def product(factors: Sequence[TruncatedSeries], order: int) -> TruncatedSeries:
    acc = TruncatedSeries.one(order)
    for f in factors:
        acc = acc * f.truncate(order)
    return acc


@cache
def euler_product(order: int) -> TruncatedSeries:
    """(1 - t)(1 - t^2)...(1 - t^order), truncated.

    The nonzero coefficients sit on the generalized pentagonal numbers with
    signs (-1)^k; that emerges from the expansion here rather than being
    assumed.
    """
    acc = TruncatedSeries.one(order)
    for i in range(1, order + 1):
        factor = TruncatedSeries.from_coefficients([1] + [0] * (i - 1) + [-1], order)
        acc = acc * factor
    return acc


def euler_coefficient(n: int) -> int:
    """Coefficient of t^n in the Euler product (values in {-1, 0, 1})."""
    if n < 0:
        raise ValueError("n must be >= 0")
    # Expand in blocks so nearby coefficients come from one cached product.
    order = max(32, -(-(n + 1) // 32) * 32)
    return euler_product(order)[n]


def pentagonal_pairs(count: int) -> list[tuple[int, int]]:
    """The first ``count`` pairs (k(3k-1)/2, k(3k+1)/2), k = 1, 2, ..."""
    return [(k * (3 * k - 1) // 2, k * (3 * k + 1) // 2) for k in range(1, count + 1)]


def partition_series(order: int) -> TruncatedSeries:
    """Inverse of the Euler product: coefficient of t^M is the number of
    partitions of M."""
    return euler_product(order).invert()


def distinct_series(order: int, signed: bool = False) -> TruncatedSeries:
    """Product over parts k of (1 +/- t^k).

    Unsigned: coefficient of t^M counts distinct-part partitions of M.
    Signed: equals the Euler product; the coefficient is the even-minus-odd
    part-count difference of those partitions.
    """
    if signed:
        return euler_product(order)
    factors = [
        TruncatedSeries.from_coefficients([1] + [0] * (k - 1) + [1], order)
        for k in range(1, order + 1)
    ]
    return product(factors, order)


def box_caps(max_part: int, max_parts: int) -> list[tuple[int, int]] | None:
    """Caps whose product generates the (max_part x max_parts) box counts,
    when such caps exist.

    The box polynomial is prod_k (1 - t^(max_part+k)) / (1 - t^k) over
    k = 1..max_parts; it splits into geometric blocks exactly when the
    numerator exponents can be matched bijectively to the denominator ones
    by divisibility.  Most small boxes split (3 x 3 needs caps 1:4, 2:1,
    3:1) but some do not: the 4 x 3 polynomial has value 35 = 5 * 7 at t=1
    and degree 12, which no product of geometric blocks achieves.
    """
    numerators = list(range(max_part + 1, max_part + max_parts + 1))

    def match(k: int, free: list[int]) -> list[tuple[int, int]] | None:
        if k == 0:
            return []
        for i, value in enumerate(free):
            if value % k == 0:
                rest = match(k - 1, free[:i] + free[i + 1:])
                if rest is not None:
                    return rest + [(k, value // k - 1)]
        return None

    return match(max_parts, numerators)


def capped_product(caps: Sequence[tuple[int, int | None]], order: int) -> TruncatedSeries:
    """Product over (part value k, max repetitions c) of
    1 + t^k + ... + t^(c*k); c = None means uncapped within the truncation.

    With caps (k, bound) for k = 1..n this generates box-restricted counts.
    """
    seen = set()
    factors = []
    for k, c in caps:
        if k < 1:
            raise ValueError(f"part value {k} must be >= 1")
        if k in seen:
            raise ValueError(f"duplicate part value {k}")
        seen.add(k)
        if c is not None and c < 0:
            raise ValueError(f"cap {c} must be >= 0")
        factors.append(TruncatedSeries.geometric(k, order, c))
    return product(factors, order)
