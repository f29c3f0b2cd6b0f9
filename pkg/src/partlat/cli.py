"""Command-line surface.

Data goes to stdout, diagnostics to stderr.  Exit status: 0 on success, 1
when `verify` finds a failing invariant, 2 on usage errors or size-cap
violations.  Output is deterministic for fixed arguments.
"""

from __future__ import annotations

import argparse
import sys

from . import counting, errata, intmatrix, lattices, oracle, schemes, series, verify
from .tables import CountTable, render

TABLE_NAMES = (
    "exact", "atmost", "odd-even-mixed", "distinct", "unit-diff",
    "euler", "euler-inverse", "inverse-exact", "inverse-unit-diff",
    "box", "scheme", "neighbors", "layers", "binomial",
)

TABLE_HELP = """\
exact              partitions of m into exactly n parts (with sum column)
atmost             partitions of m into at most n parts
odd-even-mixed     all-odd part counts by n, plus odd/even/mixed/p sums
distinct           distinct-part counts by n, with total and odd-even difference
unit-diff          partitions of m with exactly n unit parts
euler              partition Toeplitz matrix, entry p(i-j)
euler-inverse      its exact inverse: Euler-product coefficients e(i-j)
inverse-exact      inverse of the exactly-n-parts table
inverse-unit-diff  inverse of the unit-diff table (= summation x euler-inverse)
box                partitions of m inside an (edge x dim) box, per edge size
scheme             partition scheme: largest part (rows) x part count (columns)
neighbors          one-unit exchange edges between adjacent part-count columns
layers             partitions of n per hook layer
binomial           hook-frame partitions by largest part (binomial rows)
"""

# Size-cap guards for interactive use; the library itself enforces the
# oracle and lattice caps.
MAX_TABLE_SIZE = 200
MAX_MATRIX_SIZE = 500


def _matrix_table(name: str, m: intmatrix.IntMatrix, base: int = 0) -> CountTable:
    n = m.rows
    labels = tuple(range(base, base + n))
    return CountTable(name, "i", "j", labels, labels, m.entries, show_sums=False)


def _build_table(args) -> CountTable:
    name = args.name
    if name == "exact":
        return counting.exact_table(args.max)
    if name == "atmost":
        return counting.atmost_table(args.max)
    if name == "odd-even-mixed":
        return counting.odd_even_mixed_table(args.max)
    if name == "distinct":
        return counting.distinct_table(args.max)
    if name == "unit-diff":
        return counting.unit_diff_table(args.max)
    if name == "euler":
        return _matrix_table(name, intmatrix.partition_matrix(args.size))
    if name == "euler-inverse":
        return _matrix_table(name, intmatrix.euler_matrix(args.size))
    if name == "inverse-exact":
        return _matrix_table(name, intmatrix.inverse_exact_parts_matrix(args.size), base=1)
    if name == "inverse-unit-diff":
        return _matrix_table(name, intmatrix.inverse_unit_diff_matrix(args.size))
    if name == "box":
        return counting.box_table(args.edge, args.dim)
    if name == "scheme":
        return schemes.build_scheme(args.total)
    if name == "neighbors":
        return counting.right_hand_neighbor_table(args.max)
    if name == "layers":
        return counting.layer_table(args.max)
    if name == "binomial":
        return counting.binomial_table(args.max)
    raise ValueError(name)


def _cmd_table(args, out) -> int:
    if args.max > MAX_TABLE_SIZE or args.size > MAX_MATRIX_SIZE:
        print(f"table size exceeds the cap (max {MAX_TABLE_SIZE}, size {MAX_MATRIX_SIZE})",
              file=sys.stderr)
        return 2
    out.write(render(_build_table(args), args.format))
    return 0


def _cmd_count(args, out) -> int:
    record = oracle.ConstraintRecord(
        total=args.total,
        max_part=args.max_part,
        max_parts=args.max_parts,
        exact_parts=args.exact_parts,
        exact_max_part=args.exact_max_part,
        min_part=args.min_part,
        parity=args.parity,
        unit_count=args.unit_count,
        layer=args.layer,
        hook_frame=args.hook_frame,
    )
    matches = oracle.enumerate_partitions(record)
    if args.list:
        for q in matches:
            out.write(q.label() + "\n")
    out.write(f"{len(matches)}\n")
    return 0


def _cmd_scheme(args, out) -> int:
    if args.inverse:
        inv = intmatrix.scheme_inverse(args.total)
        table = CountTable(
            "scheme-inverse", "m1", "n",
            tuple(range(args.total, 0, -1)), tuple(range(1, args.total + 1)),
            inv.entries, show_sums=False,
        )
        out.write(render(table, args.format))
    else:
        out.write(render(schemes.build_scheme(args.total), args.format))
    return 0


def _cmd_lattice(args, out) -> int:
    needed = {
        "unit-exchange": ("total",),
        "split-merge": ("total",),
        "subset-swap": ("bits", "ones"),
        "subset-double-swap": ("bits", "ones"),
        "hypercube": ("dim",),
    }[args.variant]
    missing = [f"--{name}" for name in needed if getattr(args, name) is None]
    if missing:
        print(f"lattice --variant {args.variant} requires {' '.join(missing)}",
              file=sys.stderr)
        return 2
    lat = lattices.build_lattice(
        args.variant,
        total=args.total,
        slots=args.slots,
        bits=args.bits,
        ones=args.ones,
        dim=args.dim,
    )
    if args.format == "edges":
        out.write(lat.to_edge_list())
    elif args.format == "dot":
        out.write(lat.to_dot())
    else:
        import json

        out.write(json.dumps(lat.to_json_dict(), indent=2) + "\n")
    return 0


def _parse_caps(text: str) -> list[tuple[int, int | None]]:
    caps = []
    for chunk in text.split(","):
        part, _, bound = chunk.partition(":")
        caps.append((int(part), None if bound in ("", "*") else int(bound)))
    return caps


def _cmd_series(args, out) -> int:
    if args.kind == "euler":
        s = series.euler_product(args.order)
    elif args.kind == "partition":
        s = series.partition_series(args.order)
    elif args.kind == "distinct":
        s = series.distinct_series(args.order)
    elif args.kind == "distinct-signed":
        s = series.distinct_series(args.order, signed=True)
    else:
        if not args.caps:
            print("series --kind capped requires --caps", file=sys.stderr)
            return 2
        s = series.capped_product(_parse_caps(args.caps), args.order)
    out.write(" ".join(str(c) for c in s.coefficients) + "\n")
    return 0


def _cmd_verify(args, out) -> int:
    report = verify.verify_suite(args.max)
    for r in report.results:
        if r.kind == "erratum":
            status = "erratum-confirmed" if r.ok else "ERRATUM-UNCONFIRMED"
            out.write(f"{status:18} {r.name}: {r.detail}\n")
        else:
            status = "pass" if r.ok else "FAIL"
            tail = f": first counterexample {r.detail}" if not r.ok else ""
            out.write(f"{status:18} {r.name}{tail}\n")
    invariants = [r for r in report.results if r.kind == "invariant"]
    out.write(
        f"{len([r for r in invariants if r.ok])}/{len(invariants)} invariants pass, "
        f"{len(report.unconfirmed_errata)} unconfirmed errata\n"
    )
    return 0 if report.ok else 1


def _cmd_errata(args, out) -> int:
    out.write(errata.render_json() if args.format == "json" else errata.render_text())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partlat",
        description="Exact partition tables, schemes, series and orbit lattices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="emit a counting table or matrix",
                       description=TABLE_HELP,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    t.add_argument("name", choices=TABLE_NAMES)
    t.add_argument("--max", type=int, default=6, help="largest total (row index)")
    t.add_argument("--size", type=int, default=6, help="matrix dimension")
    t.add_argument("--edge", type=int, default=3, help="box tables: largest edge size")
    t.add_argument("--dim", type=int, default=3, help="box tables: number of part slots")
    t.add_argument("--total", type=int, default=7, help="scheme tables: the partitioned total")
    t.add_argument("--format", choices=("tsv", "csv", "json", "md"), default="tsv")
    t.set_defaults(fn=_cmd_table)

    c = sub.add_parser("count", help="count (or list) partitions under constraints")
    c.add_argument("--total", type=int, required=True)
    c.add_argument("--max-part", type=int)
    c.add_argument("--max-parts", type=int)
    c.add_argument("--exact-parts", type=int)
    c.add_argument("--exact-max-part", type=int)
    c.add_argument("--min-part", type=int)
    c.add_argument("--parity", choices=oracle.PARITY_CHOICES, default="none")
    c.add_argument("--unit-count", type=int)
    c.add_argument("--layer", type=int)
    c.add_argument("--hook-frame", type=int)
    c.add_argument("--list", action="store_true", help="print the partitions too")
    c.set_defaults(fn=_cmd_count)

    s = sub.add_parser("scheme", help="emit a partition scheme or its exact inverse")
    s.add_argument("--total", type=int, required=True)
    s.add_argument("--inverse", action="store_true")
    s.add_argument("--format", choices=("tsv", "csv", "json", "md"), default="tsv")
    s.set_defaults(fn=_cmd_scheme)

    g = sub.add_parser("lattice", help="emit an orbit lattice")
    g.add_argument("--variant", choices=lattices.VARIANTS, required=True)
    g.add_argument("--total", type=int, help="partition variants: the partitioned total")
    g.add_argument("--slots", type=int, help="partition variants: vector dimension (default: total)")
    g.add_argument("--bits", type=int, help="subset variants: word length")
    g.add_argument("--ones", type=int, help="subset variants: number of ones")
    g.add_argument("--dim", type=int, help="hypercube dimension")
    g.add_argument("--format", choices=("edges", "dot", "json"), default="edges")
    g.set_defaults(fn=_cmd_lattice)

    e = sub.add_parser("series", help="print generating-series coefficients")
    e.add_argument("--kind", choices=("euler", "partition", "distinct", "distinct-signed", "capped"),
                   required=True)
    e.add_argument("--order", type=int, default=12, help="truncation order")
    e.add_argument("--caps", help='capped products: "part:cap,..." with * for uncapped')
    e.set_defaults(fn=_cmd_series)

    v = sub.add_parser("verify", help="run the invariant suite and errata demonstrations")
    v.add_argument("--max", type=int, default=12, help="largest total for exhaustive checks (1..25)")
    v.set_defaults(fn=_cmd_verify)

    r = sub.add_parser("errata", help="print the documented misprints ledger")
    r.add_argument("--format", choices=("text", "json"), default="text")
    r.set_defaults(fn=_cmd_errata)

    return parser


def run(argv: list[str], out=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args, out if out is not None else sys.stdout)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
