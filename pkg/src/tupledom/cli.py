"""Command-line front end: corpus generation, constructive domination,
exact solving, bound comparison, and set verification.

Exit codes: 0 success, 1 verification/feasibility failure, 2 usage or
parse error.  Output is a table on a terminal, JSON otherwise (or with
--format json); every record echoes the graph's index and graph6 string.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import atlas
from .bounds import compare_report
from .domination import dominating_r, total_dominating_r_minus_1, verify_closed, verify_total
from .exact import DEFAULT_BUDGET, STATUS_PROVEN, exact_gamma_closed, exact_gamma_total
from .formats import parse_dimacs, parse_graph6, write_graph6
from .generators import GENERATOR_ID, random_regular
from .graph import Graph

_DIMACS_SUFFIXES = {".col", ".dimacs", ".edge"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tupledom",
        description="constructive k-tuple (total) domination for regular graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate graph6 corpora")
    p_gen.add_argument("--n", type=int, help="vertex count for random graphs")
    p_gen.add_argument("--r", type=int, help="degree for random graphs")
    p_gen.add_argument("--count", type=int, default=1, help="graphs to generate")
    p_gen.add_argument("--seed", type=int, default=0, help="base seed, one graph per increment")
    p_gen.add_argument("--atlas", help="named graph, e.g. heawood, pg2:3, moore:7, cycle:5, complete_bipartite:3,3")
    p_gen.add_argument("--out", help="output file (default standard output)")
    p_gen.add_argument("--meta", action="store_true", help="write a .meta sidecar next to --out")

    def add_input_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("paths", nargs="*", help="graph files (default standard input)")
        p.add_argument("--format-in", choices=["graph6", "dimacs"], help="override input format sniffing")
        p.add_argument("--format", choices=["text", "json", "csv"], help="output format (default: table on a terminal, JSON otherwise)")

    p_dom = sub.add_parser("dominate", help="run the constructive algorithms")
    p_dom.add_argument("--variant", choices=["total", "closed"], required=True)
    add_input_args(p_dom)

    p_exact = sub.add_parser("exact", help="exact minimum by branch and bound")
    p_exact.add_argument("--variant", choices=["total", "closed"], required=True)
    p_exact.add_argument("--k", type=int, required=True)
    p_exact.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    add_input_args(p_exact)

    p_bounds = sub.add_parser("bounds", help="compare bound formulas per graph")
    add_input_args(p_bounds)

    p_verify = sub.add_parser("verify", help="check a claimed dominating set")
    p_verify.add_argument("--variant", choices=["total", "closed"], required=True)
    p_verify.add_argument("--k", type=int, required=True)
    p_verify.add_argument("--set", required=True, help="comma-separated vertex ids")
    add_input_args(p_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "dominate":
            return _cmd_dominate(args)
        if args.command == "exact":
            return _cmd_exact(args)
        if args.command == "bounds":
            return _cmd_bounds(args)
        return _cmd_verify(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


# -- input plumbing --------------------------------------------------------


def _read_graphs(args: argparse.Namespace) -> list[Graph]:
    if not args.paths:
        text = sys.stdin.read()
        if args.format_in == "dimacs":
            return [parse_dimacs(text)]
        return [parse_graph6(line) for line in text.splitlines() if line.strip()]
    graphs: list[Graph] = []
    for path in args.paths:
        text = Path(path).read_text()
        fmt = args.format_in
        if fmt is None:
            fmt = "dimacs" if Path(path).suffix in _DIMACS_SUFFIXES else "graph6"
        if fmt == "dimacs":
            graphs.append(parse_dimacs(text))
        else:
            graphs.extend(parse_graph6(line) for line in text.splitlines() if line.strip())
    return graphs


def _emit(args: argparse.Namespace, records: list[dict], columns: list[str]) -> None:
    fmt = args.format
    if fmt is None:
        fmt = "text" if sys.stdout.isatty() else "json"
    if fmt == "json":
        print(json.dumps({"command": args.command, "records": records}, indent=2))
        return
    rows = [[_cell(rec.get(c)) for c in columns] for rec in records]
    if fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(rows)
        return
    widths = [max(len(c), *(len(row[i]) for row in rows)) if rows else len(c) for i, c in enumerate(columns)]
    print("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip())
    for row in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())


def _cell(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.3f}"
    if isinstance(value, (list, tuple)):
        return " ".join(str(x) for x in value)
    if isinstance(value, dict):
        return "; ".join(f"{k}: {v}" for k, v in sorted(value.items()))
    return str(value)


# -- subcommands -----------------------------------------------------------


def _parse_atlas(descriptor: str) -> Graph:
    name, _, tail = descriptor.partition(":")
    argd = [int(x) for x in tail.split(",")] if tail else []

    def arity(want: int) -> None:
        if len(argd) != want:
            raise ValueError(f"atlas {name} takes {want} argument(s), got {len(argd)}")

    if name == "heawood":
        arity(0)
        return atlas.heawood()
    if name == "pg2":
        arity(1)
        return atlas.projective_plane_incidence(argd[0])
    if name == "moore":
        arity(1)
        return atlas.moore_graph(argd[0])
    if name == "cycle":
        arity(1)
        return atlas.cycle(argd[0])
    if name == "complete":
        arity(1)
        return atlas.complete(argd[0])
    if name == "complete_bipartite":
        arity(2)
        return atlas.complete_bipartite(argd[0], argd[1])
    if name == "hypercube":
        arity(1)
        return atlas.hypercube(argd[0])
    if name == "prism":
        arity(1)
        return atlas.prism(argd[0])
    raise ValueError(f"unknown atlas graph {name!r}")


def _cmd_gen(args: argparse.Namespace) -> int:
    meta: list[str]
    if args.atlas is not None:
        graphs = [_parse_atlas(args.atlas)]
        meta = [f"c source=atlas:{args.atlas}", f"c n={graphs[0].n} r={graphs[0].regularity()}"]
    else:
        if args.n is None or args.r is None:
            print("error: need --atlas or both --n and --r", file=sys.stderr)
            return 2
        try:
            graphs = [random_regular(args.n, args.r, args.seed + i) for i in range(args.count)]
        except RuntimeError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        meta = [
            f"c generator={GENERATOR_ID}",
            f"c n={args.n} r={args.r} seed={args.seed} count={args.count}",
        ]
    lines = "".join(write_graph6(g) + "\n" for g in graphs)
    if args.out is None:
        if args.meta:
            print("error: --meta needs --out", file=sys.stderr)
            return 2
        sys.stdout.write(lines)
    else:
        Path(args.out).write_text(lines)
        if args.meta:
            Path(args.out + ".meta").write_text("".join(m + "\n" for m in meta))
    return 0


def _cmd_dominate(args: argparse.Namespace) -> int:
    build = total_dominating_r_minus_1 if args.variant == "total" else dominating_r
    verify = verify_total if args.variant == "total" else verify_closed
    records = []
    failed = False
    for i, g in enumerate(_read_graphs(args)):
        record: dict = {"index": i, "graph6": write_graph6(g), "n": g.n}
        try:
            cert = build(g)
        except ValueError as exc:
            record["error"] = str(exc)
            failed = True
        else:
            ok = verify(g, cert.vertices, cert.k)
            record.update(
                r=g.regularity(),
                k=cert.k,
                branch=cert.branch,
                size=cert.size,
                set=sorted(cert.vertices),
                bound=cert.bound_numerator / cert.bound_denominator * g.n,
                verified=ok,
            )
            failed = failed or not ok
        records.append(record)
    _emit(args, records, ["index", "n", "r", "branch", "size", "bound", "verified", "error", "graph6"])
    return 1 if failed else 0


def _cmd_exact(args: argparse.Namespace) -> int:
    solve = exact_gamma_total if args.variant == "total" else exact_gamma_closed
    records = []
    failed = False
    for i, g in enumerate(_read_graphs(args)):
        record = {"index": i, "graph6": write_graph6(g), "n": g.n}
        result = solve(g, args.k, args.budget)
        record.update(status=result.status, nodes=result.nodes_explored)
        if result.status == STATUS_PROVEN:
            record.update(size=result.size, set=sorted(result.vertices))
        else:
            failed = True
        records.append(record)
    _emit(args, records, ["index", "n", "status", "size", "nodes", "set", "graph6"])
    return 1 if failed else 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    records = []
    failed = False
    for i, g in enumerate(_read_graphs(args)):
        record: dict = {"index": i, "graph6": write_graph6(g), "n": g.n}
        try:
            rep = compare_report(g)
        except ValueError as exc:
            record["error"] = str(exc)
            failed = True
        else:
            record.update(
                r=rep.r,
                k_total=rep.k_total,
                k_closed=rep.k_closed,
                constructive_total=rep.constructive_total,
                constructive_closed=rep.constructive_closed,
                log_total=rep.log_total,
                log_closed=rep.log_closed,
                notes=rep.notes,
            )
        records.append(record)
    _emit(
        args,
        records,
        [
            "index", "n", "r", "k_total", "k_closed", "constructive_total",
            "constructive_closed", "log_total", "log_closed", "notes", "error", "graph6",
        ],
    )
    return 1 if failed else 0


def _cmd_verify(args: argparse.Namespace) -> int:
    graphs = _read_graphs(args)
    if len(graphs) != 1:
        print(f"error: verify expects exactly one graph, got {len(graphs)}", file=sys.stderr)
        return 2
    g = graphs[0]
    if args.k < 1:
        print(f"error: k must be at least 1, got {args.k}", file=sys.stderr)
        return 2
    try:
        members = frozenset(int(x) for x in args.set.split(",") if x.strip() != "")
    except ValueError:
        print(f"error: --set must be comma-separated integers, got {args.set!r}", file=sys.stderr)
        return 2
    for v in sorted(members):
        if not 0 <= v < g.n:
            print(f"error: vertex {v} out of range for n={g.n}", file=sys.stderr)
            return 2
    for v in range(g.n):
        hood = g.closed_neighbor_set(v) if args.variant == "closed" else g.neighbor_set(v)
        have = len(hood & members)
        if have < args.k:
            print(f"FAIL: vertex {v} has {have} of the required {args.k} set neighbors")
            return 1
    print(f"PASS: set of size {len(members)} is {args.k}-tuple {'total ' if args.variant == 'total' else ''}dominating")
    return 0
