"""Evaluate the catalogue of bounds and characterizations on solved graphs.

Every row compares integers only. Rows whose bound has a fractional side are
cross-multiplied, so ``lhs`` and ``rhs`` are the cleared forms recorded in the
row's ``relation`` text. Rows B1-B11 and C1-C5 are proven results; a
violation there is a defect somewhere and gates CI. J1 and J2 are open
statements whose violations are findings, not failures.
"""

from __future__ import annotations

import os
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .graph import (
    INF,
    Graph,
    GraphError,
    block_decomposition,
    compute_metrics,
    emit_graph6,
    parse_graph6,
)
from .solvers import AUDIT_CONFIG, KINDS, BudgetExhausted, SolverConfig, solve

STATUSES = ("holds", "tight", "violated", "not_applicable", "unresolved")

# id -> (source class, relation as evaluated)
CATALOGUE: dict[str, tuple[str, str]] = {
    "B1": ("observation", "F <= F_c"),
    "B2": ("observation", "F_c <= n-1"),
    "B3": ("theorem", "F_c = n-1 iff K_n (n>=2) or K_{1,n-1} (n>=4)"),
    "B4": ("observation", "F = 1 iff path"),
    "B5": ("observation", "gamma_P <= F <= F_c"),
    "B6": ("proposition", "2*gamma_P <= F_c (n>=3, not a path)"),
    "B7": ("theorem", "F_c <= n-g+2 (2-connected)"),
    "B8": ("theorem", "F_c <= gamma_c(D-2)+2 if D in {1,2,n-1}; F_c <= gamma_c(D-1) if 3<=D<=n-2"),
    "B9": ("theorem", "F_c >= b+1"),
    "B10": ("observation", "F_c >= d+1 (g>=4, d>=3)"),
    "B11": ("theorem", "F_c >= d+g-3 (d>=3)"),
    "C1": ("cited", "F >= d"),
    "C2": ("cited", "F >= 2d-2 (g>=5)"),
    "C3": ("cited", "F*(D+1) <= D*n"),
    "C4": ("cited", "F*(D-1) <= (D-2)n+2 (D>=2)"),
    "C5": ("cited", "F <= n-gamma_c"),
    "J1": ("conjecture", "F_c >= d+(d-2)(g-3)"),
    "J2": ("open_question", "F_c*(D-1) <= gamma_c(D^2-3D+3)+2(D-2) (3<=D<=n-1)"),
}
HARD_ROWS = tuple(i for i in CATALOGUE if i[0] in "BC")
FINDING_ROWS = tuple(i for i in CATALOGUE if i[0] == "J")


@dataclass(frozen=True)
class BoundEntry:
    id: str
    status: str
    lhs: int | None
    rhs: int | None
    source: str
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "source": self.source,
            "note": self.note,
        }


def _json_number(x):
    return "inf" if x == INF else x


@dataclass
class BoundReport:
    graph_id: str
    invariants: dict[str, int | float | None]
    entries: list[BoundEntry]

    def entry(self, bound_id: str) -> BoundEntry:
        for e in self.entries:
            if e.id == bound_id:
                return e
        raise KeyError(bound_id)

    @property
    def unsolved(self) -> list[str]:
        return [k for k in KINDS if self.invariants.get(k) is None]

    def violations(self, rows: Iterable[str] = HARD_ROWS) -> list[str]:
        rows = set(rows)
        return [e.id for e in self.entries if e.id in rows and e.status == "violated"]

    def to_dict(self) -> dict:
        return {
            "graph": self.graph_id,
            "invariants": {k: _json_number(v) for k, v in self.invariants.items()},
            "unsolved": self.unsolved,
            "entries": [e.to_dict() for e in self.entries],
        }


def is_path_graph(g: Graph) -> bool:
    return g.is_connected() and g.m == g.n - 1 and max(g.degrees) <= 2


def is_complete_graph(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_star_graph(g: Graph) -> bool:
    return g.n >= 2 and g.m == g.n - 1 and max(g.degrees) == g.n - 1


class _Rows:
    """Accumulates entries; ``None`` operands mean an unsolved invariant."""

    def __init__(self):
        self.entries: list[BoundEntry] = []

    def na(self, bid: str, hypothesis: str) -> None:
        self.entries.append(BoundEntry(bid, "not_applicable", None, None, CATALOGUE[bid][0], hypothesis))

    def compare(self, bid: str, lhs, rhs, op: str, note: str = "") -> None:
        source = CATALOGUE[bid][0]
        if lhs is None or rhs is None:
            self.entries.append(BoundEntry(bid, "unresolved", lhs, rhs, source, note))
            return
        ok = lhs <= rhs if op == "<=" else lhs >= rhs
        status = "violated" if not ok else "tight" if lhs == rhs else "holds"
        self.entries.append(BoundEntry(bid, status, lhs, rhs, source, note))

    def iff(self, bid: str, lhs, rhs, structural: bool, note: str) -> None:
        source = CATALOGUE[bid][0]
        if lhs is None:
            self.entries.append(BoundEntry(bid, "unresolved", lhs, rhs, source, note))
            return
        attained = lhs == rhs
        if attained != structural:
            direction = "value without structure" if attained else "structure without value"
            status, note = "violated", f"{note}; {direction}"
        else:
            status = "tight" if attained else "holds"
        self.entries.append(BoundEntry(bid, status, lhs, rhs, source, note))


def _mul(*xs):
    out = 1
    for x in xs:
        if x is None:
            return None
        out *= x
    return out


def _add(*xs):
    if any(x is None for x in xs):
        return None
    return sum(xs)


def solve_invariants(g: Graph, cfg: SolverConfig = AUDIT_CONFIG) -> dict[str, int | float | None]:
    """Structural metrics plus the five minimum-set invariants (``None`` if over budget)."""
    met = compute_metrics(g)
    inv: dict[str, int | float | None] = {
        "n": met.n,
        "m": met.m,
        "delta": met.min_degree,
        "Delta": met.max_degree,
        "g": met.girth,
        "b": block_decomposition(g).b,
    }
    for kind in KINDS:
        try:
            inv[kind] = solve(g, kind, cfg).value
        except BudgetExhausted:
            inv[kind] = None
    return inv


def audit_graph(g: Graph, cfg: SolverConfig = AUDIT_CONFIG) -> BoundReport:
    """Solve every invariant of ``g`` and evaluate each catalogue row on it.

    Solvers run with ``cfg``; the default disables lower-bound pruning so no
    catalogued bound is assumed while it is being checked.
    """
    if g.n < 2 or not g.is_connected():
        raise GraphError("audit needs a connected graph on at least 2 vertices")
    inv = solve_invariants(g, cfg)
    n, d, D, gth, b = inv["n"], inv["delta"], inv["Delta"], inv["g"], inv["b"]
    F, Fc, gc, gP = inv["F"], inv["F_c"], inv["gamma_c"], inv["gamma_P"]
    finite_g = gth != INF
    is_path = is_path_graph(g)
    two_conn = compute_metrics(g).is_two_connected
    rows = _Rows()

    rows.compare("B1", F, Fc, "<=")
    rows.compare("B2", Fc, n - 1, "<=")
    rows.iff(
        "B3",
        Fc,
        n - 1,
        is_complete_graph(g) or (is_star_graph(g) and n >= 4),
        "complete" if is_complete_graph(g) else "star" if is_star_graph(g) and n >= 4 else "",
    )
    rows.iff("B4", F, 1, is_path, "path" if is_path else "")

    # chain: report gamma_P against F_c, and flag a break at either link
    if None in (gP, F, Fc):
        rows.compare("B5", gP, Fc if F is not None else None, "<=", "middle term F")
    elif gP <= F <= Fc:
        rows.compare("B5", gP, Fc, "<=", f"middle term F={F}")
    else:
        rows.entries.append(BoundEntry("B5", "violated", gP, Fc, "observation", f"middle term F={F}"))

    if n >= 3 and not is_path:
        rows.compare("B6", _mul(2, gP), Fc, "<=", "both sides doubled")
    else:
        rows.na("B6", "requires n >= 3 and not a path")

    if two_conn:
        rows.compare("B7", Fc, n - gth + 2, "<=")
    else:
        rows.na("B7", "requires 2-connected")

    if D in (1, 2, n - 1):
        rows.compare("B8", Fc, _add(_mul(gc, D - 2), 2), "<=", "branch D in {1,2,n-1}")
    else:
        rows.compare("B8", Fc, _mul(gc, D - 1), "<=", "branch 3 <= D <= n-2")

    rows.compare("B9", Fc, b + 1, ">=")

    if finite_g and gth >= 4 and d >= 3:
        rows.compare("B10", Fc, d + 1, ">=")
    else:
        rows.na("B10", "requires g >= 4 and delta >= 3")

    if d >= 3 and finite_g:
        rows.compare("B11", Fc, d + gth - 3, ">=")
    else:
        rows.na("B11", "requires delta >= 3")

    rows.compare("C1", F, d, ">=")
    if finite_g and gth >= 5:
        rows.compare("C2", F, 2 * d - 2, ">=")
    else:
        rows.na("C2", "requires finite g >= 5")
    rows.compare("C3", _mul(F, D + 1), D * n, "<=", "cross-multiplied by D+1")
    if D >= 2:
        rows.compare("C4", _mul(F, D - 1), (D - 2) * n + 2, "<=", "cross-multiplied by D-1")
    else:
        rows.na("C4", "requires Delta >= 2")
    rows.compare("C5", F, None if gc is None else n - gc, "<=")

    if finite_g:
        rows.compare("J1", Fc, d + (d - 2) * (gth - 3), ">=")
    else:
        rows.na("J1", "requires a cycle")
    if 3 <= D <= n - 1:
        rows.compare(
            "J2",
            _mul(Fc, D - 1),
            _add(_mul(gc, D * D - 3 * D + 3), 2 * (D - 2)),
            "<=",
            "cross-multiplied by D-1",
        )
    else:
        rows.na("J2", "requires 3 <= Delta <= n-1")

    gid = emit_graph6(g) if g.n <= 62 else f"n={g.n},m={g.m}"
    return BoundReport(gid, inv, rows.entries)


# --- corpus scanning -----------------------------------------------------------------


@dataclass
class ScanReport:
    graphs_audited: int = 0
    counts: dict[str, Counter] = field(default_factory=lambda: {i: Counter() for i in CATALOGUE})
    violations: list[BoundReport] = field(default_factory=list)
    tight: dict[str, list[str]] = field(default_factory=lambda: {i: [] for i in CATALOGUE})
    skipped: list[tuple[int, str]] = field(default_factory=list)
    unresolved_graphs: list[str] = field(default_factory=list)

    def add(self, report: BoundReport) -> None:
        self.graphs_audited += 1
        for e in report.entries:
            self.counts[e.id][e.status] += 1
            if e.status == "tight":
                self.tight[e.id].append(report.graph_id)
        if any(e.status == "violated" for e in report.entries):
            self.violations.append(report)
        if report.unsolved:
            self.unresolved_graphs.append(report.graph_id)

    def hard_violation_count(self) -> int:
        return sum(self.counts[i]["violated"] for i in HARD_ROWS)

    def finding_count(self) -> int:
        return sum(self.counts[i]["violated"] for i in FINDING_ROWS)

    def to_dict(self) -> dict:
        return {
            "graphs_audited": self.graphs_audited,
            "theorem_violations": self.hard_violation_count(),
            "open_statement_violations": self.finding_count(),
            "counts": {
                i: {s: self.counts[i][s] for s in STATUSES} for i in CATALOGUE
            },
            "tight_examples": {i: self.tight[i][0] for i in CATALOGUE if self.tight[i]},
            "violations": [r.to_dict() for r in self.violations],
            "unresolved": self.unresolved_graphs,
            "skipped": [{"index": i, "reason": r} for i, r in self.skipped],
        }

    def format_table(self) -> str:
        head = f"{'row':<5}{'source':<15}" + "".join(f"{s:>16}" for s in STATUSES)
        lines = [f"graphs audited: {self.graphs_audited}", head]
        for i, (source, _) in CATALOGUE.items():
            lines.append(
                f"{i:<5}{source:<15}" + "".join(f"{self.counts[i][s]:>16}" for s in STATUSES)
            )
        lines.append(f"theorem-class violations: {self.hard_violation_count()}")
        lines.append(f"open-statement violations: {self.finding_count()}")
        return "\n".join(lines) + "\n"


def _prepare(index: int, item) -> tuple[Graph | None, str | None]:
    if isinstance(item, Graph):
        g = item
    else:
        try:
            g = parse_graph6(item.strip())
        except GraphError as exc:
            return None, f"line {index}: {exc}"
    if g.n < 2 or not g.is_connected():
        return None, f"line {index}: graph must be connected with n >= 2"
    return g, None


def _audit_g6(args: tuple[str, SolverConfig]) -> BoundReport:
    text, cfg = args
    return audit_graph(parse_graph6(text), cfg)


def default_workers() -> int:
    """Worker count hint from ``FORCING_LAB_THREADS`` (never changes results)."""
    try:
        return max(1, int(os.environ.get("FORCING_LAB_THREADS", "1")))
    except ValueError:
        return 1


def scan_corpus(
    source: Iterable[Graph | str],
    cfg: SolverConfig = AUDIT_CONFIG,
    workers: int | None = None,
) -> ScanReport:
    """Audit every graph in ``source`` and aggregate per-row status counts.

    Items may be :class:`Graph` objects or graph6 lines; unparsable lines and
    graphs outside the audit's domain are recorded in ``skipped`` with their
    1-based position, and the scan continues. Blank lines are ignored. The
    aggregate is identical for any worker count.
    """
    workers = default_workers() if workers is None else workers
    out = ScanReport()
    graphs: list[Graph] = []
    for index, item in enumerate(source, 1):
        if isinstance(item, str) and not item.strip():
            continue
        g, reason = _prepare(index, item)
        if reason:
            out.skipped.append((index, reason))
        else:
            graphs.append(g)
    if workers <= 1 or len(graphs) < 2:
        for g in graphs:
            out.add(audit_graph(g, cfg))
        return out
    big = [g for g in graphs if g.n > 62]
    if big:
        raise GraphError("parallel scans need n <= 62 (graphs travel as graph6)")
    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunk = max(1, len(graphs) // (workers * 8))
        for report in pool.map(_audit_g6, ((emit_graph6(g), cfg) for g in graphs), chunksize=chunk):
            out.add(report)
    return out


def random_connected_graphs(count: int, n: int, seed: int) -> Iterator[Graph]:
    """Uniform labelled graphs on ``n`` vertices (each edge with probability
    1/2), rejection-sampled until connected. Reproducible from ``seed``."""
    if n < 2:
        raise GraphError("random connected graphs need n >= 2")
    rng = random.Random(seed)
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    made = 0
    while made < count:
        g = Graph(n, [p for p in pairs if rng.getrandbits(1)])
        if g.is_connected():
            made += 1
            yield g
