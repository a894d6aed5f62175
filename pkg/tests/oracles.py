"""Slow, independent reference implementations used only by the tests."""

import random
from itertools import combinations, permutations

import networkx as nx

from forcing_lab.graph import INF, Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def naive_closure(g: Graph, s) -> set:
    colored = set(s)
    changed = True
    while changed:
        changed = False
        for v in sorted(colored):
            unc = [w for w in g.neighbors(v) if w not in colored]
            if len(unc) == 1:
                colored.add(unc[0])
                changed = True
    return colored


def naive_power_monitored(g: Graph, s) -> set:
    level = set()
    for v in s:
        level |= g.closed_neighbors(v)
    while True:
        nxt = set()
        for v in level:
            if len(g.closed_neighbors(v) - level) <= 1:
                nxt |= g.closed_neighbors(v)
        if nxt == level:
            return level
        level = nxt


def brute_girth(g: Graph) -> float:
    """Shortest cycle found by trying every vertex ordering (n <= 7)."""
    for length in range(3, g.n + 1):
        for combo in combinations(range(g.n), length):
            first, rest = combo[0], combo[1:]
            for perm in permutations(rest):
                cyc = (first,) + perm
                if all(g.has_edge(cyc[i], cyc[(i + 1) % length]) for i in range(length)):
                    return length
    return INF


def brute_connected_sets(g: Graph, k: int) -> set:
    h = to_nx(g)
    return {
        frozenset(c)
        for c in combinations(range(g.n), k)
        if nx.is_connected(h.subgraph(c))
    }


def random_connected(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    while True:
        g = Graph(n, [e for e in pairs if rng.random() < p])
        if g.is_connected():
            return g
