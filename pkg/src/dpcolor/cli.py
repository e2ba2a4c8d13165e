"""Command-line front end.

Exit codes: 0 when the queried property holds (or output was produced),
1 when it fails (cycles found, instance uncolorable, audit violation),
2 for input or usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import catalog as catalog_mod
from .covers import uniform_assignment, random_cover
from .discharging import apply_rules, audit_cases, charge_str, initial_charges
from .errors import DpColorError
from .fileio import (
    audit_to_json_text,
    audit_to_table,
    coloring_to_text,
    cover_from_text,
    graph_from_text,
    plane_from_text,
    plane_to_text,
    trace_to_text,
)
from .generate import generate_plane_no46
from .graphs import has_forbidden_cycles, list_cycles
from .reduction import ConfigKind, color_planar_no46, verify_config_reducible
from .solver import brute_force_rep_set, find_rep_set, impropriety


def _read_graph_any(path: str):
    """Graph from an edge-list file, or from a plane-graph JSON file."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return plane_from_text(text).graph
    return graph_from_text(text)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_cycles(args) -> int:
    graph = _read_graph_any(args.graph)
    found = False
    for k in args.lengths:
        cycles = list_cycles(graph, k)
        print(f"cycles of length {k}: {len(cycles)}")
        for cycle in cycles:
            print("  " + "-".join(str(v) for v in cycle))
        found = found or bool(cycles)
    return 1 if found else 0


def cmd_solve(args) -> int:
    cover = cover_from_text(Path(args.cover).read_text())
    solver = brute_force_rep_set if args.brute else find_rep_set
    rep = solver(cover, args.impropriety, budget=args.budget)
    if rep is None:
        print("UNSAT")
        return 1
    _emit(coloring_to_text(rep, impropriety(cover, rep)), args.out)
    return 0


def cmd_theorem(args) -> int:
    pg = plane_from_text(Path(args.plane).read_text())
    lists = uniform_assignment(pg.graph.n, 3)
    cover = random_cover(pg.graph, lists, seed=args.seed, perfect=True)
    result = color_planar_no46(pg, cover)
    counts = impropriety(cover, result.rep_set)
    _emit(coloring_to_text(result.rep_set, counts), args.out)
    if args.trace_out:
        _emit(trace_to_text(result.trace), args.trace_out)
    return 0


def cmd_audit(args) -> int:
    pg = plane_from_text(Path(args.plane).read_text())
    if has_forbidden_cycles(pg.graph):
        ledger = initial_charges(pg)
        print("transfer rules skipped: graph contains a 4-cycle or 6-cycle")
        print(f"initial total: {charge_str(ledger.initial_total)}")
        for v in range(pg.graph.n):
            print(f"  vertex {v}: {charge_str(ledger.vertex_initial[v])}")
        for i, charge in enumerate(ledger.face_initial):
            print(f"  face {i}: {charge_str(charge)}")
        return 0
    ledger = apply_rules(pg)
    report = audit_cases(pg, ledger)
    if args.format == "json":
        _emit(audit_to_json_text(report, ledger), args.out)
    else:
        _emit(audit_to_table(report), args.out)
    ok = report.final_total == report.initial_total == -72
    return 0 if ok and report.all_audited_nonnegative else 1


def cmd_gen(args) -> int:
    pg = generate_plane_no46(args.n, args.seed, attempts=args.attempts)
    _emit(plane_to_text(pg), args.out)
    return 0


def cmd_lemma(args) -> int:
    kinds = (
        list(ConfigKind)
        if args.kind == "all"
        else [ConfigKind(args.kind)]
    )
    failed = False
    for kind in kinds:
        report = verify_config_reducible(kind)
        status = "colorable" if report.ok else "COUNTEREXAMPLE"
        print(f"{kind.value}: {report.verified}/{report.total_covers} covers {status}")
        failed = failed or not report.ok
    return 1 if failed else 0


def cmd_catalog(args) -> int:
    if args.name is None:
        for entry in catalog_mod.entries():
            pg = catalog_mod.load(entry.name)
            faces = ",".join(str(f.degree) for f in pg.faces)
            print(
                f"{entry.name:<20} n={pg.graph.n:<3} m={pg.graph.m:<3} "
                f"faces=[{faces}] no46={'yes' if entry.no46 else 'no'}"
            )
        return 0
    pg = catalog_mod.load(args.name)
    _emit(plane_to_text(pg), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dpcolor",
        description="DP-coloring toolkit for plane graphs without 4- or 6-cycles",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cycles", help="list cycles of the given lengths")
    p.add_argument("graph", help="edge-list or plane-graph file")
    p.add_argument(
        "lengths", nargs="*", type=int, default=[4, 6],
        help="cycle lengths to search (default: 4 6)",
    )
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("solve", help="find a bounded-impropriety coloring of a cover")
    p.add_argument("cover", help="cover file")
    p.add_argument("-d", "--impropriety", type=int, default=1)
    p.add_argument("--brute", action="store_true", help="use the exhaustive oracle")
    p.add_argument("--budget", type=int, default=10**6)
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser(
        "theorem",
        help="color a 4-/6-cycle-free plane graph from a random 3-list cover",
    )
    p.add_argument("plane", help="plane-graph file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--out", default=None, help="coloring output file")
    p.add_argument("--trace-out", default=None, help="reduction trace output file")
    p.set_defaults(func=cmd_theorem)

    p = sub.add_parser("audit", help="run the discharging ledger and case audit")
    p.add_argument("plane", help="plane-graph file")
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("gen", help="generate a random plane graph without 4-/6-cycles")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--attempts", type=int, default=20)
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("lemma", help="exhaustively verify a reducible configuration")
    p.add_argument(
        "kind",
        choices=[k.value for k in ConfigKind] + ["all"],
    )
    p.set_defaults(func=cmd_lemma)

    p = sub.add_parser("catalog", help="list or export built-in instances")
    p.add_argument("name", nargs="?", default=None)
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DpColorError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
