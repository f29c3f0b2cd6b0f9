#!/usr/bin/env python3
"""Generating series and the exact matrix inversions: the alternating
product over parts, its inverse (the partition series), and the Toeplitz
matrices built from both."""

from partlat import counting, intmatrix, series

# The alternating product (1-t)(1-t^2)... has coefficients -1, 0, 1 only,
# sitting on the generalized pentagonal numbers.
e = series.euler_product(15)
print("alternating product coefficients:", e.coefficients)
print("pentagonal pairs:", series.pentagonal_pairs(3))

# Its inverse generates the unrestricted partition counts.
p_series = series.partition_series(15)
print("partition series:  ", p_series.coefficients)
print("product with inverse is exactly 1:",
      (e * p_series).coefficients == (1,) + (0,) * 15)

# The minimal trapezoid blocks realize the pentagonal pair sizes.
for k in (1, 2, 3):
    a, b = counting.franklin_trapezoids(k)
    print(f"trapezoids with {k} rows: {a.nonzero_parts} and {b.nonzero_parts}"
          f" -> sizes {a.total}, {b.total}")

# Same relationship as matrices: the partition Toeplitz matrix times the
# coefficient Toeplitz matrix is the identity, exactly, at any size.
n = 8
P = intmatrix.partition_matrix(n)
E = intmatrix.euler_matrix(n)
print("\npartition matrix column 0:", P.column(0))
print("inverse matrix column 0:  ", E.column(0))
print("P @ E == I:", intmatrix.multiply(P, E).entries == intmatrix.identity(n).entries)

# Distinct-part counts: the unsigned product counts them, the signed one
# recovers the alternating coefficients as odd/even differences.
u = series.distinct_series(12)
print("\ndistinct-part counts:", u.coefficients)
for m in (5, 10, 12):
    counts, diff = counting.distinct_row(m)
    print(f"  m={m}: by part count {counts}, difference {diff}"
          f" = -e({m}) = {-series.euler_coefficient(m)}")

# Capped products generate box-restricted counts whenever the box
# polynomial factors into geometric blocks.
caps = series.box_caps(3, 3)
print("\ncaps realizing the 3x3 box:", caps)
print("coefficients:", series.capped_product(caps, 9).coefficients)
print("box counts:  ", tuple(counting.p_box(3, 3, m) for m in range(10)))
