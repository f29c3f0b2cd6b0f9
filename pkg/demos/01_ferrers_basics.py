#!/usr/bin/env python3
"""Tour of the core partition values: canonical form, Ferrers matrices,
conjugation, transversal, box complements and shifted number scales."""

from partlat import MultiplicityVector, Partition, canonicalize, from_multiplicity


def show(matrix, title):
    print(title)
    for row in matrix.cells:
        print("   ", " ".join(str(v) for v in row))


# Any vector of nonnegative integers canonicalizes to a partition: sort
# decreasing, keep explicit zero padding.
q = canonicalize((1, 2, 1, 3), 4)
print("canonical form of (1,2,1,3):", q.parts, "total", q.total)

# The Ferrers matrix realizes the partition as left-justified rows of ones.
f = q.to_ferrers(4, 3)
show(f, "Ferrers matrix in a 4x3 frame:")

# Transposing the matrix is conjugation.
show(f.transpose(), "transposed (the conjugate partition):")
print("conjugate:", q.conjugate().parts)
print("conjugate twice returns the original:", q.conjugate().conjugate() == q)

# Complementing inside a frame and reading the rest backwards (transversing)
# gives the partition of the remaining area.
single = Partition((1,))
show(single.to_ferrers(2, 2), "one cell in a 2x2 frame:")
complement = single.box_complement(2, 2)
print("box complement:", complement.parts, "- together they tile the frame:",
      single.total + complement.total == 4)

# Multiplicity vectors count parts per value and allow shifted (even
# negative) scales.  Shifting the base never changes the pattern, only the
# weighted sum.
pattern = MultiplicityVector(base=-2, counts=(4, 0, 0, 0, 0, 1))
print("\npattern", pattern.counts, "on base -2 expands to", from_multiplicity(pattern))
for s in range(5):
    shifted = pattern.shift(s)
    print(f"  base {shifted.base:+d}: weighted sum {shifted.weighted_sum}")

# Hook frames and layers: the L-shaped border of the Ferrers graph and what
# is left inside it.
block = Partition((4, 4, 4))
print("\npartition", block.nonzero_parts,
      "hook frame", block.hook_frame_size(),
      "interior", block.interior().nonzero_parts,
      "layer", block.layer())
