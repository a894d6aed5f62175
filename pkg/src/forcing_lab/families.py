"""Constructors for named graph families and extremal constructions, each
paired with the invariant values the theory predicts for it.

Vertex numbering is fixed per family so witnesses and traces are
reproducible:

* ``path``, ``cycle``: ``0 .. n-1`` in order along the path / around the cycle.
* ``complete``: ``0 .. n-1``.
* ``star``: hub ``0``, leaves ``1 .. n-1``.
* ``complete_bipartite``: side A is ``0 .. a-1``, side B is ``a .. a+b-1``.
* ``g_delta``: hub ``0``; spoke ``i`` occupies ``1 + i*(delta+2)`` onward as
  (first subdivision vertex, second subdivision vertex, spoke tip, then the
  ``delta-1`` pendant leaves of the tip).
* ``g_k_delta``: backbone tree on ``0 .. k-1`` (a path by default), then the
  pendant leaves of backbone vertex 0, of vertex 1, and so on.
* ``flower``: hub ``0``; each petal cycle contributes its remaining vertices
  consecutively, walking away from the hub and back.
* ``rail``: hubs ``u = 0`` and ``v = 1``; internal vertices path by path,
  each path listed from the ``u`` side.
* ``petersen``: outer 5-cycle ``0..4``, spokes ``i -- i+5``, inner pentagram.
* ``hypercube``: vertices are ``d``-bit integers, adjacent when they differ
  in one bit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .graph import Graph, GraphError

FAMILY_KINDS = (
    "path",
    "cycle",
    "complete",
    "star",
    "complete_bipartite",
    "g_delta",
    "g_k_delta",
    "rail",
    "flower",
    "petersen",
    "hypercube",
)


class FamilySpecError(ValueError):
    """Family parameters outside the family's domain, or unparsable spec text."""


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()
    backbone: tuple[tuple[int, int], ...] | None = None

    def __str__(self) -> str:
        if self.kind == "g_k_delta":
            k, delta = self.params
            text = f"g_k_delta:k={k},delta={delta}"
            if self.backbone is not None:
                text += ",backbone=" + "/".join(f"{u}-{v}" for u, v in self.backbone)
            return text
        if not self.params:
            return self.kind
        return f"{self.kind}:{','.join(map(str, self.params))}"


@dataclass(frozen=True)
class FamilyPrediction:
    """Predicted invariant values; ``basis`` names the result behind each."""

    expected: dict[str, int] = field(default_factory=dict)
    basis: dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            key: {"value": self.expected[key], "basis": self.basis[key]}
            for key in sorted(self.expected)
        }


def parse_family_spec(text: str) -> FamilySpec:
    """Parse e.g. ``g_delta:4``, ``flower:3,4,5`` or ``g_k_delta:k=2,delta=3``."""
    kind, _, rest = text.strip().partition(":")
    if kind not in FAMILY_KINDS:
        raise FamilySpecError(f"unknown family {kind!r}; expected one of {FAMILY_KINDS}")
    if kind == "g_k_delta":
        opts = {}
        for item in filter(None, rest.split(",")):
            key, eq, val = item.partition("=")
            if not eq:
                raise FamilySpecError(f"g_k_delta expects key=value items, got {item!r}")
            opts[key.strip()] = val.strip()
        try:
            k, delta = int(opts.pop("k")), int(opts.pop("delta"))
        except (KeyError, ValueError):
            raise FamilySpecError("g_k_delta needs integer k= and delta=") from None
        backbone = None
        if "backbone" in opts:
            edges = []
            for pair in filter(None, opts.pop("backbone").split("/")):
                m = re.fullmatch(r"(\d+)-(\d+)", pair)
                if not m:
                    raise FamilySpecError(f"bad backbone edge {pair!r}")
                edges.append((int(m[1]), int(m[2])))
            backbone = tuple(edges)
        if opts:
            raise FamilySpecError(f"unknown g_k_delta options {sorted(opts)}")
        return FamilySpec(kind, (k, delta), backbone)
    try:
        params = tuple(int(x) for x in rest.split(",") if x.strip())
    except ValueError:
        raise FamilySpecError(f"non-integer parameter in {text!r}") from None
    return FamilySpec(kind, params)


# --- constructors ------------------------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise FamilySpecError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for j in range(n) for i in range(j)])


def star_graph(n: int) -> Graph:
    """``K_{1,n-1}`` on ``n`` vertices."""
    return Graph(n, [(0, i) for i in range(1, n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def hypercube_graph(d: int) -> Graph:
    n = 1 << d
    return Graph(n, [(v, v ^ 1 << i) for v in range(n) for i in range(d) if v < v ^ 1 << i])


def g_delta_graph(delta: int) -> Graph:
    """``K_{1,delta}`` with every edge subdivided twice and ``delta-1`` pendants per tip."""
    if delta < 3:
        raise FamilySpecError("g_delta needs delta >= 3")
    edges = []
    for i in range(delta):
        base = 1 + i * (delta + 2)
        edges += [(0, base), (base, base + 1), (base + 1, base + 2)]
        edges += [(base + 2, base + 3 + j) for j in range(delta - 1)]
    return Graph((delta + 1) ** 2, edges)


def g_k_delta_graph(
    k: int, delta: int, backbone: tuple[tuple[int, int], ...] | None = None
) -> Graph:
    """A tree on ``k`` vertices topped up with pendant leaves to degree ``delta``."""
    if k < 1 or delta < 3:
        raise FamilySpecError("g_k_delta needs k >= 1 and delta >= 3")
    if backbone is None:
        backbone = tuple((i, i + 1) for i in range(k - 1))
    try:
        tree = Graph(k, backbone)
    except GraphError as exc:
        raise FamilySpecError(f"invalid backbone: {exc}") from None
    if tree.m != k - 1 or not tree.is_connected():
        raise FamilySpecError("backbone must be a tree on k vertices")
    if k > 1 and max(tree.degrees) >= delta:
        raise FamilySpecError("backbone maximum degree must be below delta")
    edges = list(tree.edges)
    nxt = k
    for v in range(k):
        for _ in range(delta - tree.degree(v)):
            edges.append((v, nxt))
            nxt += 1
    return Graph(nxt, edges)


def build_rail(k: int, internal_lengths: list[int] | tuple[int, ...]) -> Graph:
    """Two hubs joined by ``k`` internally disjoint paths.

    ``internal_lengths[i]`` is the number of internal vertices on path ``i``;
    at most one path may be the direct edge (length 0).
    """
    q = list(internal_lengths)
    if k < 2 or len(q) != k:
        raise FamilySpecError("rail needs k >= 2 and one internal length per path")
    if any(x < 0 for x in q):
        raise FamilySpecError("rail internal lengths must be nonnegative")
    if q.count(0) > 1:
        raise FamilySpecError("rail allows at most one direct hub edge (multi-edge otherwise)")
    edges = []
    nxt = 2
    for length in q:
        if length == 0:
            edges.append((0, 1))
            continue
        path = [0] + list(range(nxt, nxt + length)) + [1]
        edges += list(zip(path, path[1:]))
        nxt += length
    return Graph(nxt, edges)


def flower_graph(lengths: list[int] | tuple[int, ...]) -> Graph:
    """Cycles of the given lengths sharing a single common vertex."""
    if not lengths or any(c < 3 for c in lengths):
        raise FamilySpecError("flower needs at least one cycle, each of length >= 3")
    edges = []
    nxt = 1
    for c in lengths:
        petal = [0] + list(range(nxt, nxt + c - 1)) + [0]
        edges += list(zip(petal, petal[1:]))
        nxt += c - 1
    return Graph(nxt, edges)


def _predict(entries: dict[str, tuple[int, str]]) -> FamilyPrediction:
    return FamilyPrediction(
        expected={k: v for k, (v, _) in entries.items()},
        basis={k: b for k, (_, b) in entries.items()},
    )


def build_family(spec: FamilySpec | str) -> tuple[Graph, FamilyPrediction]:
    if isinstance(spec, str):
        spec = parse_family_spec(spec)
    kind, p = spec.kind, spec.params

    def need(count: int) -> None:
        if len(p) != count:
            raise FamilySpecError(f"{kind} takes {count} parameter(s), got {len(p)}")

    if kind == "path":
        need(1)
        if p[0] < 2:
            raise FamilySpecError("path needs n >= 2")
        return path_graph(p[0]), _predict(
            {"F": (1, "paths have forcing number 1"), "F_c": (1, "a leaf forces a path")}
        )
    if kind == "cycle":
        need(1)
        n = p[0]
        return cycle_graph(n), _predict(
            {
                "F": (2, "two adjacent cycle vertices force"),
                "F_c": (2, "two adjacent cycle vertices force"),
                "gamma_c": (n - 2, "connected domination of a cycle"),
                "gamma_P": (1, "one vertex power-dominates a cycle"),
            }
        )
    if kind == "complete":
        need(1)
        n = p[0]
        if n < 2:
            raise FamilySpecError("complete needs n >= 2")
        return complete_graph(n), _predict(
            {
                "F": (n - 1, "no n-2 vertices force K_n"),
                "F_c": (n - 1, "no n-2 vertices force K_n"),
                "gamma_c": (1, "any vertex dominates K_n"),
            }
        )
    if kind == "star":
        need(1)
        n = p[0]
        if n < 2:
            raise FamilySpecError("star needs n >= 2")
        pred = {"gamma_c": (1, "the hub dominates")}
        if n >= 4:
            pred["F_c"] = (n - 1, "stars attain F_c = n-1")
        return star_graph(n), _predict(pred)
    if kind == "complete_bipartite":
        need(2)
        if min(p) < 1:
            raise FamilySpecError("complete_bipartite needs both sides nonempty")
        return complete_bipartite_graph(*p), FamilyPrediction()
    if kind == "g_delta":
        need(1)
        delta = p[0]
        g = g_delta_graph(delta)
        return g, _predict(
            {
                "n": ((delta + 1) ** 2, "G_delta has order (delta+1)^2"),
                "F_c": (g.n - delta, "G_delta attains F_c = n - delta"),
            }
        )
    if kind == "g_k_delta":
        need(2)
        k, delta = p
        g = g_k_delta_graph(k, delta, spec.backbone)
        return g, _predict(
            {
                "n": (k * (delta - 1) + 2, "G_{k,delta} has order k(delta-1)+2"),
                "gamma_c": (k, "the backbone is a minimum connected dominating set"),
                "F_c": (k * (delta - 2) + 2, "G_{k,delta} attains gamma_c(delta-2)+2"),
            }
        )
    if kind == "flower":
        g = flower_graph(p)
        k = len(p)
        return g, _predict(
            {
                "b": (k, "one 2-connected block per petal"),
                "F_c": (k + 1, "hub plus one neighbour per petal is optimal"),
            }
        )
    if kind == "rail":
        return build_rail(len(p), p), FamilyPrediction()
    if kind == "petersen":
        need(0)
        return petersen_graph(), FamilyPrediction()
    if kind == "hypercube":
        need(1)
        if p[0] < 1:
            raise FamilySpecError("hypercube needs d >= 1")
        return hypercube_graph(p[0]), FamilyPrediction()
    raise FamilySpecError(f"unknown family {kind!r}")
