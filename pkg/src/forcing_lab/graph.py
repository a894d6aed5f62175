"""Simple undirected graphs on dense vertex ids, plus the structural metrics
the bound catalogue needs (degrees, girth, diameter, blocks).

Vertex sets are passed around publicly as iterables of ints and returned as
``frozenset``; internally every set is an ``int`` bit mask where bit ``v``
stands for vertex ``v``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

INF = math.inf

GRAPH6_MAX_N = 62
ENUMERATION_MAX_N = 7


class GraphError(ValueError):
    """Invalid graph construction or a structural precondition failure."""


class GraphFormatError(GraphError):
    """Malformed graph6 or edge-list text."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class UnsupportedSizeError(GraphError):
    """Requested order is outside what an operation supports."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple undirected graph on vertices ``0 .. n-1``.

    Parameters
    ----------
    n : int
        Number of vertices, at least 1.
    edges : iterable of pairs
        Undirected edges. Loops and repeated edges are rejected.
    """

    __slots__ = ("_n", "_masks", "_edges", "_nbrs")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise GraphError(f"graph order must be at least 1, got {n}")
        masks = [0] * n
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self._n = n
        self._masks = tuple(masks)
        self._edges = tuple(sorted(seen))
        self._nbrs = tuple(frozenset(bits(m)) for m in masks)

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> Graph:
        masks = list(masks)
        edges = [(u, v) for u, m in enumerate(masks) for v in bits(m) if u < v]
        g = cls(len(masks), edges)
        if g._masks != tuple(masks):
            raise GraphError("adjacency masks are not symmetric")
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return self._edges

    @property
    def masks(self) -> tuple[int, ...]:
        """Open-neighbourhood bit mask of each vertex."""
        return self._masks

    @property
    def full_mask(self) -> int:
        return (1 << self._n) - 1

    def neighbors(self, v: int) -> frozenset[int]:
        return self._nbrs[v]

    def closed_neighbors(self, v: int) -> frozenset[int]:
        return self._nbrs[v] | {v}

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self._nbrs)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._masks[u] >> v & 1)

    def vertex_mask(self, s: Iterable[int]) -> int:
        """Bit mask of a vertex set, checking every member is a vertex."""
        m = 0
        for v in s:
            if not 0 <= v < self._n:
                raise GraphError(f"vertex {v} not in graph of order {self._n}")
            m |= 1 << v
        return m

    def closed_neighborhood_mask(self, s: int) -> int:
        """N[S] for a mask S."""
        out = s
        for v in bits(s):
            out |= self._masks[v]
        return out

    def is_connected_mask(self, s: int) -> bool:
        """Whether the subgraph induced by mask ``s`` is connected (False for empty)."""
        if not s:
            return False
        seen = s & -s
        frontier = seen
        masks = self._masks
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= masks[v]
            nxt &= s & ~seen
            seen |= nxt
            frontier = nxt
        return seen == s

    def is_connected(self) -> bool:
        return self.is_connected_mask(self.full_mask)

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """Induced subgraph relabelled to ``0..k-1``, with the original ids."""
        order = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(order)}
        edges = [(index[u], index[v]) for u, v in self._edges if u in index and v in index]
        return Graph(len(order), edges), order

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._masks == other._masks

    def __hash__(self) -> int:
        return hash(self._masks)

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={list(self._edges)})"


# --- graph6 -----------------------------------------------------------------


def _pair_order(n: int) -> list[tuple[int, int]]:
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    return [(i, j) for j in range(1, n) for i in range(j)]


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (short form, ``n <= 62``)."""
    data = text.rstrip("\r\n")
    if data.startswith(">>graph6<<"):
        data = data[10:]
    if not data:
        raise GraphFormatError("empty graph6 string", 0)
    for i, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"character {ch!r} outside graph6 range", i)
    if ord(data[0]) == 126:
        raise GraphFormatError("long-form graph6 (n > 62) is not supported", 0)
    n = ord(data[0]) - 63
    if n < 1:
        raise GraphFormatError("graph6 order must be at least 1", 0)
    pairs = _pair_order(n)
    nbytes = -(-len(pairs) // 6)
    if len(data) < 1 + nbytes:
        raise GraphFormatError(
            f"truncated graph6: expected {1 + nbytes} bytes, got {len(data)}", len(data)
        )
    if len(data) > 1 + nbytes:
        raise GraphFormatError("trailing characters after graph6 data", 1 + nbytes)
    edges = []
    for k, (i, j) in enumerate(pairs):
        byte = ord(data[1 + k // 6]) - 63
        if byte >> (5 - k % 6) & 1:
            edges.append((i, j))
    pad = nbytes * 6 - len(pairs)
    if pad and (ord(data[nbytes]) - 63) & ((1 << pad) - 1):
        raise GraphFormatError("nonzero padding bits", nbytes)
    return Graph(n, edges)


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n > GRAPH6_MAX_N:
        raise UnsupportedSizeError(f"graph6 short form supports n <= {GRAPH6_MAX_N}, got {n}")
    pairs = _pair_order(n)
    out = [chr(n + 63)]
    for start in range(0, len(pairs), 6):
        val = 0
        for k in range(6):
            val <<= 1
            if start + k < len(pairs):
                i, j = pairs[start + k]
                val |= g.has_edge(i, j)
        out.append(chr(val + 63))
    return "".join(out)


# --- edge list ----------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` starts a comment."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise GraphFormatError("empty edge list")
    lineno, head = rows[0]
    try:
        n, m = (int(x) for x in head)
    except ValueError:
        raise GraphFormatError(f"line {lineno}: expected header 'n m'") from None
    if len(rows) - 1 != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(rows) - 1}")
    edges = []
    for lineno, parts in rows[1:]:
        try:
            u, v = (int(x) for x in parts)
        except ValueError:
            raise GraphFormatError(f"line {lineno}: expected 'u v'") from None
        edges.append((u, v))
    try:
        return Graph(n, edges)
    except GraphFormatError:
        raise
    except GraphError as exc:
        raise GraphFormatError(str(exc)) from None


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


# --- metrics ------------------------------------------------------------------


@dataclass(frozen=True)
class GraphMetrics:
    n: int
    m: int
    min_degree: int
    max_degree: int
    girth: float  # int, or INF when acyclic
    diameter: float  # int, or INF when disconnected
    is_connected: bool
    is_two_connected: bool


def _bfs_distances(g: Graph, root: int) -> list[int]:
    dist = [-1] * g.n
    dist[root] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def girth(g: Graph) -> float:
    """Shortest cycle length via one BFS per root; ``INF`` for forests."""
    best = INF
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                break
            for w in g.neighbors(u):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def diameter(g: Graph) -> float:
    best = 0
    for root in range(g.n):
        dist = _bfs_distances(g, root)
        if min(dist) < 0:
            return INF
        best = max(best, max(dist))
    return best


def compute_metrics(g: Graph) -> GraphMetrics:
    degs = g.degrees
    connected = g.is_connected()
    two_conn = connected and g.n >= 3 and not block_decomposition(g).cut_vertices
    return GraphMetrics(
        n=g.n,
        m=g.m,
        min_degree=min(degs),
        max_degree=max(degs),
        girth=girth(g),
        diameter=diameter(g),
        is_connected=connected,
        is_two_connected=two_conn,
    )


# --- blocks -------------------------------------------------------------------


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (biconnected components) of a connected graph.

    ``b`` counts blocks on at least three vertices, i.e. the 2-connected ones;
    ``K_2`` blocks are listed in ``blocks`` but not counted.
    """

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    b: int
    block_graph_edges: tuple[tuple[int, int], ...]


def block_decomposition(g: Graph) -> BlockDecomposition:
    if not g.is_connected():
        raise GraphError("block decomposition requires a connected graph")
    if g.n == 1:
        return BlockDecomposition((frozenset({0}),), frozenset(), 0, ())

    n = g.n
    disc = [-1] * n
    low = [0] * n
    timer = 0
    edge_stack: list[tuple[int, int]] = []
    blocks: list[frozenset[int]] = []
    cuts: set[int] = set()

    # iterative Hopcroft-Tarjan, root 0
    adj = [sorted(g.neighbors(v)) for v in range(n)]
    disc[0] = low[0] = timer
    timer += 1
    stack = [(0, -1, iter(adj[0]))]
    root_children = 0
    while stack:
        u, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] < 0:
                edge_stack.append((u, w))
                disc[w] = low[w] = timer
                timer += 1
                if u == 0:
                    root_children += 1
                stack.append((w, u, iter(adj[w])))
                advanced = True
                break
            if w != parent and disc[w] < disc[u]:
                edge_stack.append((u, w))
                low[u] = min(low[u], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent >= 0:
            low[parent] = min(low[parent], low[u])
            if low[u] >= disc[parent]:
                if parent != 0:
                    cuts.add(parent)
                comp = set()
                while True:
                    a, c = edge_stack.pop()
                    comp.update((a, c))
                    if (a, c) == (parent, u):
                        break
                blocks.append(frozenset(comp))
    if root_children > 1:
        cuts.add(0)

    blocks.sort(key=sorted)
    block_edges = tuple(
        sorted((c, i) for i, blk in enumerate(blocks) for c in blk if c in cuts)
    )
    return BlockDecomposition(
        blocks=tuple(blocks),
        cut_vertices=frozenset(cuts),
        b=sum(1 for blk in blocks if len(blk) >= 3),
        block_graph_edges=block_edges,
    )


# --- enumeration --------------------------------------------------------------


def _masks_connected(masks: list[int], full: int) -> bool:
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= masks[v]
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
    return seen == full


def enumerate_connected_labeled_graphs(
    n: int, start: int = 0, stop: int | None = None
) -> Iterator[Graph]:
    """Every connected labelled graph on ``{0..n-1}``, by ascending edge mask.

    Bit ``k`` of the edge mask selects the ``k``-th pair in graph6 order.
    ``start``/``stop`` restrict the mask range so callers can split the space.
    """
    if not 1 <= n <= ENUMERATION_MAX_N:
        raise UnsupportedSizeError(f"enumeration supports 1 <= n <= {ENUMERATION_MAX_N}, got {n}")
    pairs = _pair_order(n)
    total = 1 << len(pairs)
    stop = total if stop is None else min(stop, total)
    full = (1 << n) - 1
    for emask in range(start, stop):
        masks = [0] * n
        for k in bits(emask):
            i, j = pairs[k]
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        if _masks_connected(masks, full):
            yield Graph(n, [pairs[k] for k in bits(emask)])


def count_edge_masks(n: int) -> int:
    return 1 << (n * (n - 1) // 2)

