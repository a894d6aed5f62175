from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from forcing_lab.families import complete_graph, cycle_graph, path_graph, petersen_graph, star_graph
from forcing_lab.graph import (
    INF,
    Graph,
    GraphError,
    GraphFormatError,
    UnsupportedSizeError,
    block_decomposition,
    compute_metrics,
    emit_edge_list,
    emit_graph6,
    enumerate_connected_labeled_graphs,
    parse_edge_list,
    parse_graph6,
)

from .oracles import brute_girth, random_connected, to_nx


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


class TestGraph6:
    @pytest.mark.parametrize(
        "text, edges",
        [
            ("Bw", [(0, 1), (0, 2), (1, 2)]),
            ("Bg", [(0, 1), (1, 2)]),
            ("C~", [(i, j) for j in range(4) for i in range(j)]),
            ("@", []),
        ],
    )
    def test_hand_encoded(self, text, edges):
        g = parse_graph6(text)
        assert g.edges == tuple(sorted(edges))
        assert emit_graph6(g) == text

    def test_matches_networkx_encoder(self):
        for g in [petersen_graph(), cycle_graph(9), star_graph(7)]:
            expected = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
            assert emit_graph6(g) == expected

    @given(graphs(max_n=30))
    @settings(max_examples=200)
    def test_round_trip(self, g):
        assert parse_graph6(emit_graph6(g)) == g

    @pytest.mark.parametrize(
        "text, offset",
        [("B", 1), ("Bww", 2), ("B\x20", 1), ("~?@?", 0), ("Bx", 1)],
    )
    def test_malformed(self, text, offset):
        with pytest.raises(GraphFormatError) as info:
            parse_graph6(text)
        assert info.value.offset == offset
        assert "byte offset" in str(info.value)

    def test_too_large_to_emit(self):
        with pytest.raises(UnsupportedSizeError):
            emit_graph6(path_graph(63))


class TestEdgeList:
    def test_round_trip_with_comments(self):
        text = "# a triangle\n3 3\n0 1\n1 2  # edge\n0 2\n"
        g = parse_edge_list(text)
        assert g == complete_graph(3)
        assert parse_edge_list(emit_edge_list(g)) == g

    @pytest.mark.parametrize(
        "text", ["", "3 2\n0 1\n", "2 1\n0 0\n", "3 2\n0 1\n1 0\n", "2 1\n0 x\n"]
    )
    def test_rejects(self, text):
        with pytest.raises(GraphFormatError):
            parse_edge_list(text)


def test_constructor_rejects_loops_and_duplicates():
    with pytest.raises(GraphError):
        Graph(3, [(1, 1)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph(0)


@given(graphs())
def test_adjacency_symmetric_and_loopless(g):
    for v in range(g.n):
        assert v not in g.neighbors(v)
        for w in g.neighbors(v):
            assert v in g.neighbors(w)


class TestMetrics:
    def test_k4(self):
        m = compute_metrics(complete_graph(4))
        assert (m.girth, m.min_degree, m.max_degree, m.diameter) == (3, 3, 3, 1)
        assert m.is_two_connected

    def test_p5(self):
        m = compute_metrics(path_graph(5))
        assert (m.girth, m.min_degree, m.max_degree, m.diameter) == (INF, 1, 2, 4)
        assert not m.is_two_connected

    def test_petersen_against_brute_force(self):
        g = petersen_graph()
        m = compute_metrics(g)
        h = to_nx(g)
        assert m.diameter == max(max(d.values()) for _, d in nx.all_pairs_shortest_path_length(h))
        assert m.girth == min(len(c) for c in nx.simple_cycles(h, length_bound=10))
        assert (m.girth, m.min_degree, m.max_degree, m.diameter) == (5, 3, 3, 2)

    def test_disconnected(self):
        m = compute_metrics(Graph(4, [(0, 1), (2, 3)]))
        assert m.diameter == INF and not m.is_connected and not m.is_two_connected

    def test_girth_matches_cycle_enumeration_exhaustively(self):
        for n in range(1, 7):
            for g in enumerate_connected_labeled_graphs(n):
                assert compute_metrics(g).girth == brute_girth(g)

    def test_girth_matches_cycle_enumeration_sampled(self, rng):
        for _ in range(150):
            g = random_connected(rng, 7, p=rng.choice([0.3, 0.5]))
            assert compute_metrics(g).girth == brute_girth(g)

    @given(graphs())
    def test_degree_order(self, g):
        m = compute_metrics(g)
        assert m.min_degree <= m.max_degree <= g.n - 1
        assert (m.diameter == INF) == (not m.is_connected)
        assert (m.girth == INF) == nx.is_forest(to_nx(g))


class TestBlocks:
    def test_tree(self):
        g = Graph(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)])
        d = block_decomposition(g)
        assert d.b == 0
        assert sorted(sorted(b) for b in d.blocks) == sorted(sorted(e) for e in g.edges)
        assert d.cut_vertices == {1, 3}

    def test_bowtie(self):
        d = block_decomposition(Graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]))
        assert d.b == 2 and d.cut_vertices == {0}
        assert sorted(d.block_graph_edges) == [(0, 0), (0, 1)]

    def test_cycle(self):
        d = block_decomposition(cycle_graph(6))
        assert d.b == 1 and not d.cut_vertices and len(d.blocks) == 1

    def test_disconnected_rejected(self):
        with pytest.raises(GraphError):
            block_decomposition(Graph(4, [(0, 1), (2, 3)]))

    def test_against_networkx(self, rng):
        for _ in range(300):
            g = random_connected(rng, rng.randint(2, 14), p=rng.choice([0.15, 0.25, 0.4]))
            d = block_decomposition(g)
            h = to_nx(g)
            assert set(d.blocks) == {frozenset(c) for c in nx.biconnected_components(h)}
            assert d.cut_vertices == set(nx.articulation_points(h))

    @given(graphs(max_n=10))
    def test_edges_partitioned_and_tree_iff_b0(self, g):
        if not g.is_connected():
            return
        d = block_decomposition(g)
        owners = [sum(1 for b in d.blocks if u in b and v in b) for u, v in g.edges]
        assert all(c == 1 for c in owners)
        for b1, b2 in combinations(d.blocks, 2):
            common = b1 & b2
            assert len(common) <= 1 and common <= d.cut_vertices
        assert d.b <= len(d.blocks)
        assert (d.b == 0) == (g.m == g.n - 1)


class TestEnumeration:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_counts_against_brute_filter(self, n):
        pairs = [(i, j) for j in range(1, n) for i in range(j)]
        expected = 0
        for r in range(len(pairs) + 1):
            for es in combinations(pairs, r):
                h = nx.Graph(list(es))
                h.add_nodes_from(range(n))
                expected += nx.is_connected(h)
        got = list(enumerate_connected_labeled_graphs(n))
        assert len(got) == expected
        assert len(set(got)) == len(got)

    def test_known_small_counts(self):
        assert [sum(1 for _ in enumerate_connected_labeled_graphs(n)) for n in (3, 4)] == [4, 38]

    def test_range_split_partitions(self):
        whole = list(enumerate_connected_labeled_graphs(5))
        parts = list(enumerate_connected_labeled_graphs(5, 0, 300)) + list(
            enumerate_connected_labeled_graphs(5, 300)
        )
        assert parts == whole

    @pytest.mark.parametrize("n", [0, 8])
    def test_out_of_range(self, n):
        with pytest.raises(UnsupportedSizeError):
            next(enumerate_connected_labeled_graphs(n))
