#!/usr/bin/env python3
"""Orbit lattices: one-unit exchange and split/merge graphs on partitions,
plus the bit-string lattices (swap graph, Petersen graph, hypercube)."""

from partlat import counting, lattices

# All fifteen orbits of 7 in seven slots, joined when one unit moves
# between two positions.
unit = lattices.build_unit_exchange(7, 7)
print(f"one-unit exchange lattice of 7: {unit.node_count} nodes, "
      f"{unit.edge_count} edges")
print("neighbors of 3310000:", ", ".join(unit.neighbors("3310000")))

# Equal Euclidean radius does not mean adjacent: 330 and 411 need two
# exchanges, and three steps when only whole-file splits/merges are allowed.
small_unit = lattices.build_unit_exchange(6, 3)
small_split = lattices.build_split_merge(6, 3)
print("\n330 and 411 have equal squared length:",
      sum(v * v for v in (3, 3, 0)) == sum(v * v for v in (4, 1, 1)))
print("exchange distance:", lattices.distance(small_unit, "330", "411"))
print("split/merge distance:", lattices.distance(small_split, "330", "411"))

# Counting the exchange edges that cross between part-count columns
# recovers the prefix sums of the partition numbers.
print("\nedges between part-count columns:")
for m in range(2, 8):
    row = lattices.column_edge_counts(m)
    print(f"  total {m}: {row}  sum {sum(row)} "
          f"(= p(0)+...+p({m - 2}) = {counting.neighbor_total(m)})")

# Bit-string lattices.
swap = lattices.build_subset_swap(5, 3)
petersen = lattices.build_subset_double_swap(5, 2)
cube = lattices.build_hypercube(3)
print(f"\nswap graph on 5-bit words with three ones: {swap.node_count} nodes, "
      f"{swap.edge_count} edges, degree {swap.degree(swap.nodes[0])}")
print(f"double-swap graph (the Petersen graph): {petersen.node_count} nodes, "
      f"{petersen.edge_count} edges, degree {petersen.degree(petersen.nodes[0])}")
print(f"3-cube: {cube.node_count} nodes, {cube.edge_count} edges")

print("\nGraphviz export of the 3-cube:\n")
print(cube.to_dot())
