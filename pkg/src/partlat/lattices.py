"""Orbit lattices: graphs on canonical partitions or bit strings.

Variants
--------
unit-exchange       partitions of M in at most n slots; an edge moves one
                    unit between two positions and re-sorts.
split-merge         same nodes; an edge merges two nonzero parts (or,
                    read backwards, splits a part in two).
subset-swap         fixed-weight bit strings, edges at Hamming distance 2.
subset-double-swap  fixed-weight bit strings, edges at Hamming distance 4
                    (for 5 bits and weight 2 or 3 this is the Petersen
                    graph).
hypercube           all d-bit strings, edges at Hamming distance 1.

Nodes are canonical text labels sorted lexicographically, so exports are
byte-stable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from . import oracle
from .partitions import Partition

VARIANTS = ("unit-exchange", "split-merge", "subset-swap", "subset-double-swap", "hypercube")

# Refuse to materialize graphs whose node set alone is unreasonable.
NODE_CAP = 10 ** 6


@dataclass(frozen=True)
class OrbitLattice:
    variant: str
    nodes: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    def __post_init__(self):
        node_set = set(self.nodes)
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"self-loop at {a}")
            if a not in node_set or b not in node_set:
                raise ValueError(f"edge ({a}, {b}) leaves the node set")
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("duplicate edges")

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, node: str) -> tuple[str, ...]:
        if node not in set(self.nodes):
            raise KeyError(f"unknown node {node!r}")
        out = []
        for a, b in self.edges:
            if a == node:
                out.append(b)
            elif b == node:
                out.append(a)
        return tuple(sorted(out))

    def degree(self, node: str) -> int:
        return len(self.neighbors(node))

    def to_edge_list(self) -> str:
        return "".join(f"{a} -- {b}\n" for a, b in self.edges)

    def to_dot(self) -> str:
        lines = [f'graph "{self.variant}" {{']
        lines += [f'  "{n}";' for n in self.nodes]
        lines += [f'  "{a}" -- "{b}";' for a, b in self.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "variant": self.variant,
            "nodes": list(self.nodes),
            "edges": [list(e) for e in self.edges],
        }


def _finish(variant: str, labels: set[str], edges: set[tuple[str, str]]) -> OrbitLattice:
    return OrbitLattice(variant, tuple(sorted(labels)), tuple(sorted(edges)))


def _edge(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a < b else (b, a)


def _partition_nodes(total: int, slots: int) -> list[Partition]:
    if slots < 1:
        raise ValueError("slots must be >= 1")
    nodes = oracle.enumerate_partitions(
        oracle.ConstraintRecord(total=total, max_parts=slots)
    )
    if len(nodes) > NODE_CAP:
        raise ValueError(f"node count {len(nodes)} exceeds the cap {NODE_CAP}")
    return [q.with_padding(slots) for q in nodes]


def build_unit_exchange(total: int, slots: int) -> OrbitLattice:
    """Orbits of ``total`` in ``slots`` positions; neighbors differ by moving
    exactly one unit from one position to another (Euclidean step sqrt(2))."""
    nodes = _partition_nodes(total, slots)
    labels = {q.label() for q in nodes}
    edges: set[tuple[str, str]] = set()
    for q in nodes:
        vec = list(q.parts)
        for i in range(slots):
            if vec[i] < 1:
                continue
            for j in range(slots):
                if i == j:
                    continue
                moved = list(vec)
                moved[i] -= 1
                moved[j] += 1
                other = Partition(tuple(sorted(moved, reverse=True)), slots)
                if other != q:
                    edges.add(_edge(q.label(), other.label()))
    return _finish("unit-exchange", labels, edges)


def build_split_merge(total: int, slots: int) -> OrbitLattice:
    """Same nodes as unit-exchange; an edge joins two nonzero parts into one
    (equivalently splits one part into two).  Every edge changes the number
    of nonzero parts by exactly one."""
    nodes = _partition_nodes(total, slots)
    labels = {q.label() for q in nodes}
    edges: set[tuple[str, str]] = set()
    for q in nodes:
        ps = q.nonzero_parts
        for i, j in combinations(range(len(ps)), 2):
            merged = [v for k, v in enumerate(ps) if k not in (i, j)]
            merged.append(ps[i] + ps[j])
            other = Partition(tuple(sorted(merged, reverse=True)), slots)
            edges.add(_edge(q.label(), other.label()))
    return _finish("split-merge", labels, edges)


def _bit_nodes(bits: int, ones: int) -> list[str]:
    if bits < 1 or not 0 <= ones <= bits:
        raise ValueError("need bits >= 1 and 0 <= ones <= bits")
    if math.comb(bits, ones) > NODE_CAP:
        raise ValueError(f"node count {math.comb(bits, ones)} exceeds the cap {NODE_CAP}")
    nodes = []
    for positions in combinations(range(bits), ones):
        word = ["0"] * bits
        for i in positions:
            word[i] = "1"
        nodes.append("".join(word))
    return nodes


def _hamming(a: str, b: str) -> int:
    return sum(x != y for x, y in zip(a, b))


def build_subset_swap(bits: int, ones: int) -> OrbitLattice:
    nodes = _bit_nodes(bits, ones)
    edges = {
        _edge(a, b) for a, b in combinations(nodes, 2) if _hamming(a, b) == 2
    }
    return _finish("subset-swap", set(nodes), edges)


def build_subset_double_swap(bits: int, ones: int) -> OrbitLattice:
    nodes = _bit_nodes(bits, ones)
    edges = {
        _edge(a, b) for a, b in combinations(nodes, 2) if _hamming(a, b) == 4
    }
    return _finish("subset-double-swap", set(nodes), edges)


def build_hypercube(dim: int) -> OrbitLattice:
    if dim < 1:
        raise ValueError("dim must be >= 1")
    if 2 ** dim > NODE_CAP:
        raise ValueError(f"node count {2 ** dim} exceeds the cap {NODE_CAP}")
    nodes = [format(x, f"0{dim}b") for x in range(2 ** dim)]
    edges = {
        _edge(a, b) for a, b in combinations(nodes, 2) if _hamming(a, b) == 1
    }
    return _finish("hypercube", set(nodes), edges)


def build_lattice(variant: str, **params) -> OrbitLattice:
    """Dispatch by variant name; see the module docstring for parameters."""
    if variant == "unit-exchange":
        return build_unit_exchange(params["total"], params.get("slots") or params["total"])
    if variant == "split-merge":
        return build_split_merge(params["total"], params.get("slots") or params["total"])
    if variant == "subset-swap":
        return build_subset_swap(params["bits"], params["ones"])
    if variant == "subset-double-swap":
        return build_subset_double_swap(params["bits"], params["ones"])
    if variant == "hypercube":
        return build_hypercube(params["dim"])
    raise ValueError(f"unknown lattice variant {variant!r}; choose one of {VARIANTS}")


def distance(lattice: OrbitLattice, a: str, b: str) -> int | float:
    """Unweighted shortest-path length; math.inf when disconnected."""
    node_set = set(lattice.nodes)
    for x in (a, b):
        if x not in node_set:
            raise KeyError(f"unknown node {x!r}")
    if a == b:
        return 0
    adjacency: dict[str, list[str]] = {n: [] for n in lattice.nodes}
    for x, y in lattice.edges:
        adjacency[x].append(y)
        adjacency[y].append(x)
    seen = {a}
    frontier = [a]
    steps = 0
    while frontier:
        steps += 1
        nxt = []
        for node in frontier:
            for other in adjacency[node]:
                if other == b:
                    return steps
                if other not in seen:
                    seen.add(other)
                    nxt.append(other)
        frontier = nxt
    return math.inf


def column_edge_counts(total: int) -> tuple[int, ...]:
    """Unit-exchange edges of the full lattice of ``total`` that join an
    orbit with n nonzero parts to one with n + 1, for n = 1..total-1."""
    if total < 2:
        raise ValueError("total must be >= 2")
    lat = build_unit_exchange(total, total)
    sizes = {label: sum(1 for ch in _label_parts(label) if ch > 0) for label in lat.nodes}
    counts = [0] * (total - 1)
    for a, b in lat.edges:
        lo, hi = sorted((sizes[a], sizes[b]))
        if hi == lo + 1:
            counts[lo - 1] += 1
    return tuple(counts)


def _label_parts(label: str) -> tuple[int, ...]:
    if "," in label:
        return tuple(int(x) for x in label.split(","))
    return tuple(int(ch) for ch in label)
