"""Command-line entry point: ``forcing-lab {solve,trace,family,audit,scan}``.

Exit status: 0 success, 2 input error, 3 node budget exhausted, 4 a proven
(theorem-class) bound was violated.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .audit import CATALOGUE, audit_graph, random_connected_graphs, scan_corpus
from .families import FamilySpecError, build_family, parse_family_spec
from .forcing import forcing_closure, power_domination_closure
from .graph import (
    INF,
    ENUMERATION_MAX_N,
    Graph,
    GraphError,
    emit_edge_list,
    emit_graph6,
    enumerate_connected_labeled_graphs,
    parse_edge_list,
    parse_graph6,
)
from .solvers import BudgetExhausted, SolverConfig, solve

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_VIOLATION = 4

PARAM_KINDS = {"F": "F", "Fc": "F_c", "F_c": "F_c", "gamma": "gamma", "gamma_c": "gamma_c", "gamma_P": "gamma_P"}


class InputError(Exception):
    pass


def _dump(doc: dict) -> str:
    return json.dumps({"schema_version": SCHEMA_VERSION, **doc}, indent=2, sort_keys=True) + "\n"


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def load_graph(path: str, fmt: str | None = None) -> Graph:
    text = _read_text(path)
    if fmt is None:
        fmt = "g6" if path.endswith(".g6") else None
    if fmt is None:
        first = next((ln.split("#", 1)[0].split() for ln in text.splitlines() if ln.split("#", 1)[0].strip()), [])
        fmt = "edges" if len(first) == 2 and all(t.isdigit() for t in first) else "g6"
    try:
        if fmt == "edges":
            return parse_edge_list(text)
        line = next((ln for ln in text.splitlines() if ln.strip()), "")
        return parse_graph6(line.strip())
    except GraphError as exc:
        raise InputError(f"{path}: {exc}") from None


def parse_vertex_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise InputError(f"malformed vertex set {text!r}; expected comma-separated ids") from None


def _config(args) -> SolverConfig:
    budget = getattr(args, "budget", None)
    if budget is not None and budget < 1:
        raise InputError("--budget must be at least 1")
    return SolverConfig(pruning_enabled=not getattr(args, "no_pruning", False), node_budget=budget)


# --- subcommands --------------------------------------------------------------------


def cmd_solve(args, out) -> int:
    g = load_graph(args.infile, args.format)
    kind = PARAM_KINDS[args.param]
    try:
        result = solve(g, kind, _config(args))
    except BudgetExhausted as exc:
        out.write(_dump({"command": "solve", "kind": kind, "status": "budget_exhausted",
                         "nodes_explored": exc.nodes_explored}))
        return EXIT_BUDGET
    except GraphError as exc:
        raise InputError(str(exc)) from None
    if args.output == "text":
        out.write(f"{result.kind} = {result.value}  witness {sorted(result.witness)}\n")
    else:
        out.write(_dump({"command": "solve", "status": "solved", **result.to_dict()}))
    return EXIT_OK


def cmd_trace(args, out) -> int:
    g = load_graph(args.infile, args.format)
    s = parse_vertex_list(args.set)
    try:
        trace = forcing_closure(g, s) if args.process == "forcing" else power_domination_closure(g, s)
    except GraphError as exc:
        raise InputError(str(exc)) from None
    if args.output == "text":
        out.write(trace.to_text())
    else:
        reached = trace.closure if args.process == "forcing" else trace.monitored
        doc = {"command": "trace", **trace.to_dict(), "complete": len(reached) == g.n}
        out.write(_dump(doc))
    return EXIT_OK


def cmd_family(args, out) -> int:
    try:
        spec = parse_family_spec(args.spec)
        g, prediction = build_family(spec)
    except (FamilySpecError, GraphError) as exc:
        raise InputError(str(exc)) from None
    if args.emit == "edges":
        graph_text = emit_edge_list(g)
    else:
        try:
            graph_text = emit_graph6(g)
        except GraphError as exc:
            raise InputError(f"{exc}; use --emit edges") from None
    if args.output == "text":
        out.write(graph_text if graph_text.endswith("\n") else graph_text + "\n")
        return EXIT_OK
    doc = {"command": "family", "spec": str(spec), "n": g.n, "m": g.m}
    if args.emit == "edges":
        doc["edges"] = [list(e) for e in g.edges]
    else:
        doc["graph6"] = graph_text
    if args.predict:
        doc["prediction"] = prediction.to_dict()
    out.write(_dump(doc))
    return EXIT_OK


def cmd_audit(args, out) -> int:
    g = load_graph(args.infile, args.format)
    cfg = SolverConfig(pruning_enabled=False, node_budget=args.budget)
    try:
        report = audit_graph(g, cfg)
    except GraphError as exc:
        raise InputError(str(exc)) from None
    if args.output == "text":
        inv = ", ".join(f"{k}={'inf' if v == INF else v}" for k, v in report.invariants.items())
        lines = [f"graph {report.graph_id}: {inv}"]
        for e in report.entries:
            rel = CATALOGUE[e.id][1]
            lines.append(f"{e.id:<4} {e.status:<15} lhs={e.lhs} rhs={e.rhs}  [{rel}] {e.note}".rstrip())
        out.write("\n".join(lines) + "\n")
    else:
        out.write(_dump({"command": "audit", **report.to_dict()}))
    if report.violations():
        return EXIT_VIOLATION
    return EXIT_BUDGET if report.unsolved else EXIT_OK


def cmd_scan(args, out) -> int:
    cfg = SolverConfig(pruning_enabled=False, node_budget=args.budget)
    if args.all_connected is not None:
        if not 2 <= args.all_connected <= ENUMERATION_MAX_N:
            raise InputError(f"--all-connected supports 2..{ENUMERATION_MAX_N}")
        source = enumerate_connected_labeled_graphs(args.all_connected)
        label = f"all-connected:{args.all_connected}"
    elif args.corpus is not None:
        source = _read_text(args.corpus).splitlines()
        label = f"corpus:{args.corpus}"
    else:
        if args.n is None or args.seed is None:
            raise InputError("--random needs --n and --seed")
        if args.n < 2 or args.random < 0:
            raise InputError("--random needs COUNT >= 0 and --n >= 2")
        source = random_connected_graphs(args.random, args.n, args.seed)
        label = f"random:{args.random}:n={args.n}:seed={args.seed}"
    report = scan_corpus(source, cfg, workers=args.workers)
    if args.output == "text":
        out.write(report.format_table())
    elif args.output == "graph6":
        out.write("".join(r.graph_id + "\n" for r in report.violations))
    else:
        out.write(_dump({"command": "scan", "source": label, **report.to_dict()}))
    if report.hard_violation_count():
        return EXIT_VIOLATION
    return EXIT_BUDGET if report.unresolved_graphs else EXIT_OK


# --- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="forcing-lab", description=__doc__.splitlines()[0])
    parser.add_argument("--output", choices=("json", "text", "graph6"), default="json",
                        help="output format (graph6 applies to scan violation dumps)")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p):
        p.add_argument("--in", dest="infile", required=True, help="graph file, or - for stdin")
        p.add_argument("--format", choices=("g6", "edges"), help="input format (default: by suffix/content)")

    p = sub.add_parser("solve", help="exact value and canonical witness of one invariant")
    p.add_argument("--param", required=True, choices=sorted(PARAM_KINDS))
    graph_input(p)
    p.add_argument("--no-pruning", action="store_true", help="do not skip cardinalities via lower bounds")
    p.add_argument("--budget", type=int, help="maximum candidate sets to examine")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("trace", help="forcing or power-domination trace from a vertex set")
    p.add_argument("--set", required=True, help='comma-separated vertex ids, e.g. "0,3,5"')
    p.add_argument("--process", choices=("forcing", "power"), default="forcing")
    graph_input(p)
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("family", help="build a named family graph")
    p.add_argument("--spec", required=True, help='e.g. "g_delta:4", "flower:3,4,5", "g_k_delta:k=2,delta=3"')
    p.add_argument("--emit", choices=("g6", "edges"), default="g6")
    p.add_argument("--predict", action="store_true", help="include predicted invariant values")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("audit", help="evaluate every catalogue bound on one graph")
    graph_input(p)
    p.add_argument("--budget", type=int, help="per-invariant node budget")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("scan", help="audit a corpus and aggregate")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--all-connected", type=int, metavar="N", help="every connected labelled graph of order N")
    src.add_argument("--corpus", metavar="FILE", help="graph6 file, one graph per line")
    src.add_argument("--random", type=int, metavar="COUNT", help="COUNT random connected graphs")
    p.add_argument("--n", type=int, help="order for --random")
    p.add_argument("--seed", type=int, help="seed for --random")
    p.add_argument("--workers", type=int, help="worker processes (default: FORCING_LAB_THREADS or 1)")
    p.add_argument("--budget", type=int, help="per-invariant node budget")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"forcing-lab: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"forcing-lab: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
