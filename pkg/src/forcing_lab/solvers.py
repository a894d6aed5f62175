"""Exact minimum-set solvers for F, F_c, gamma, gamma_c and gamma_P.

Two routes are provided. :func:`oracle_minimum_set` sweeps every subset in
(cardinality, lexicographic) order with no shortcuts and is the reference the
tests check against. The named solvers stage the search by cardinality,
optionally skip cardinalities ruled out by proven lower bounds, and grow
connected candidate sets directly for the connected variants.

Both routes return the lexicographically least minimum set (compared as
sorted id tuples) so their outputs can be compared exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator

from .forcing import (
    is_connected_forcing_mask,
    is_dominating_mask,
    is_forcing_mask,
    is_power_dominating_mask,
)
from .graph import INF, Graph, GraphError, UnsupportedSizeError, bits, block_decomposition, girth

KINDS = ("F", "F_c", "gamma", "gamma_c", "gamma_P")
CONNECTED_KINDS = frozenset({"F_c", "gamma_c"})
LOWER_BOUND_SOURCES = frozenset({"min_degree", "blocks", "girth_delta"})
ORACLE_MAX_N = 25


class BudgetExhausted(RuntimeError):
    """The node budget ran out before the minimum was certified."""

    def __init__(self, kind: str, nodes_explored: int):
        super().__init__(f"{kind}: node budget exhausted after {nodes_explored} candidates")
        self.kind = kind
        self.nodes_explored = nodes_explored


@dataclass(frozen=True)
class SolverConfig:
    pruning_enabled: bool = True
    lower_bound_sources: frozenset[str] = field(default_factory=lambda: LOWER_BOUND_SOURCES)
    node_budget: int | None = None

    def __post_init__(self):
        unknown = set(self.lower_bound_sources) - LOWER_BOUND_SOURCES
        if unknown:
            raise ValueError(f"unknown lower bound sources: {sorted(unknown)}")
        if self.node_budget is not None and self.node_budget < 1:
            raise ValueError("node_budget must be at least 1")


AUDIT_CONFIG = SolverConfig(pruning_enabled=False)


@dataclass(frozen=True)
class SolverResult:
    kind: str
    value: int
    witness: frozenset[int]
    nodes_explored: int
    pruning_enabled: bool

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "value": self.value,
            "witness": sorted(self.witness),
            "nodes_explored": self.nodes_explored,
            "pruning_enabled": self.pruning_enabled,
        }


def predicate_for(g: Graph, kind: str) -> Callable[[int], bool]:
    if kind == "F":
        return lambda s: is_forcing_mask(g, s)
    if kind == "F_c":
        return lambda s: is_connected_forcing_mask(g, s)
    if kind == "gamma":
        return lambda s: is_dominating_mask(g, s)
    if kind == "gamma_c":
        return lambda s: is_dominating_mask(g, s, require_connected=True)
    if kind == "gamma_P":
        return lambda s: is_power_dominating_mask(g, s)
    raise ValueError(f"unknown invariant kind {kind!r}; expected one of {KINDS}")


def _require_connected(g: Graph, kind: str) -> None:
    if not g.is_connected():
        raise GraphError(f"{kind} requires a connected graph")


# --- oracle -----------------------------------------------------------------------


def oracle_minimum_set(g: Graph, kind: str) -> SolverResult:
    """Brute-force minimum: first satisfier in (cardinality, lexicographic) order."""
    pred = predicate_for(g, kind)
    if g.n > ORACLE_MAX_N:
        raise UnsupportedSizeError(f"oracle supports n <= {ORACLE_MAX_N}, got {g.n}")
    if kind in CONNECTED_KINDS or kind == "gamma_P":
        _require_connected(g, kind)
    nodes = 0
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            nodes += 1
            s = 0
            for v in combo:
                s |= 1 << v
            if pred(s):
                return SolverResult(kind, k, frozenset(combo), nodes, False)
    raise AssertionError("the full vertex set always satisfies every predicate")


# --- staged search ------------------------------------------------------------------


class _Counter:
    __slots__ = ("kind", "nodes", "budget")

    def __init__(self, kind: str, budget: int | None):
        self.kind = kind
        self.nodes = 0
        self.budget = budget

    def tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExhausted(self.kind, self.nodes - 1)


def _search_all_subsets(
    g: Graph, pred: Callable[[int], bool], lb: int, counter: _Counter
) -> tuple[int, int]:
    weights = [1 << v for v in range(g.n)]
    for k in range(max(lb, 1), g.n + 1):
        for combo in combinations(weights, k):
            counter.tick()
            s = sum(combo)
            if pred(s):
                return k, s
    raise AssertionError("the full vertex set always satisfies every predicate")


def connected_sets(g: Graph, k: int, anchor: int) -> Iterator[int]:
    """Masks of all connected ``k``-sets whose smallest vertex is ``anchor``.

    Sets grow from the anchor through their frontier; vertices below the
    anchor are never admitted, and a frontier vertex skipped in one branch is
    forbidden in all later sibling branches, so every set appears once.
    """
    masks = g.masks
    allowed = g.full_mask & ~((1 << anchor) - 1)

    def grow(sub: int, size: int, cand: int, forb: int) -> Iterator[int]:
        if size == k:
            yield sub
            return
        while cand:
            w = cand & -cand
            cand ^= w
            nxt = (cand | masks[w.bit_length() - 1]) & allowed & ~(sub | w | forb)
            yield from grow(sub | w, size + 1, nxt, forb)
            forb |= w

    start = 1 << anchor
    yield from grow(start, 1, masks[anchor] & allowed, 0)


def _search_connected(
    g: Graph, pred: Callable[[int], bool], lb: int, counter: _Counter
) -> tuple[int, int]:
    for k in range(max(lb, 1), g.n + 1):
        for anchor in range(g.n):
            best = None
            best_mask = 0
            for s in connected_sets(g, k, anchor):
                counter.tick()
                if pred(s):
                    key = tuple(bits(s))
                    if best is None or key < best:
                        best, best_mask = key, s
            # every set under a smaller anchor is lexicographically smaller
            if best is not None:
                return k, best_mask
    raise AssertionError("the full vertex set always satisfies every predicate")


def _result(kind: str, found: tuple[int, int], counter: _Counter, cfg: SolverConfig):
    k, s = found
    return SolverResult(kind, k, frozenset(bits(s)), counter.nodes, cfg.pruning_enabled)


def forcing_number(g: Graph, cfg: SolverConfig = SolverConfig()) -> SolverResult:
    if g.n >= 2 and min(g.degrees) == 0:
        raise GraphError("forcing number requires a graph without isolated vertices")
    lb = 1
    if cfg.pruning_enabled and "min_degree" in cfg.lower_bound_sources:
        lb = max(lb, min(g.degrees))
    counter = _Counter("F", cfg.node_budget)
    found = _search_all_subsets(g, predicate_for(g, "F"), lb, counter)
    return _result("F", found, counter, cfg)


def connected_forcing_lower_bound(g: Graph, sources: frozenset[str]) -> int:
    """Largest proven lower bound on F_c from the enabled sources (connected g)."""
    lb = 1
    delta = min(g.degrees)
    if "min_degree" in sources:
        lb = max(lb, delta)
    if "blocks" in sources:
        lb = max(lb, block_decomposition(g).b + 1)
    if "girth_delta" in sources and delta >= 3:
        gth = girth(g)
        if gth != INF:
            lb = max(lb, delta + gth - 3)
            if gth >= 4:
                lb = max(lb, delta + 1)
    return lb


def connected_forcing_number(g: Graph, cfg: SolverConfig = SolverConfig()) -> SolverResult:
    _require_connected(g, "F_c")
    lb = 1
    if cfg.pruning_enabled:
        lb = connected_forcing_lower_bound(g, cfg.lower_bound_sources)
    counter = _Counter("F_c", cfg.node_budget)
    found = _search_connected(g, predicate_for(g, "F_c"), lb, counter)
    return _result("F_c", found, counter, cfg)


def domination_number(
    g: Graph, connected: bool = False, cfg: SolverConfig = SolverConfig()
) -> SolverResult:
    kind = "gamma_c" if connected else "gamma"
    counter = _Counter(kind, cfg.node_budget)
    if connected:
        _require_connected(g, kind)
        found = _search_connected(g, predicate_for(g, kind), 1, counter)
    else:
        found = _search_all_subsets(g, predicate_for(g, kind), 1, counter)
    return _result(kind, found, counter, cfg)


def power_domination_number(g: Graph, cfg: SolverConfig = SolverConfig()) -> SolverResult:
    _require_connected(g, "gamma_P")
    counter = _Counter("gamma_P", cfg.node_budget)
    found = _search_all_subsets(g, predicate_for(g, "gamma_P"), 1, counter)
    return _result("gamma_P", found, counter, cfg)


def solve(g: Graph, kind: str, cfg: SolverConfig = SolverConfig()) -> SolverResult:
    if kind == "F":
        return forcing_number(g, cfg)
    if kind == "F_c":
        return connected_forcing_number(g, cfg)
    if kind == "gamma":
        return domination_number(g, False, cfg)
    if kind == "gamma_c":
        return domination_number(g, True, cfg)
    if kind == "gamma_P":
        return power_domination_number(g, cfg)
    raise ValueError(f"unknown invariant kind {kind!r}; expected one of {KINDS}")
