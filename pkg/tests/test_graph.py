import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import connected_graphs, floyd_warshall
from twomode.edgelist import load_fixture
from twomode.errors import DisconnectedGraph, DuplicateEdge, IndexOutOfRange, IntraPartEdge
from twomode.extremal import build_extremal_tree
from twomode.graph import (
    A0,
    A1,
    UNREACHABLE,
    Graph,
    bfs_distances,
    bfs_spanning_tree,
    build_bipartite,
    centrality_report,
    centralization,
    centralizations,
    closeness,
    closeness_argmax,
    eigenvector_centrality,
    is_tree,
    max_degree_property_check,
    part_max_centralization,
    to_decimal,
    total_distance,
    total_distances,
)

FIG1_EDGES = [(0, 0), (0, 1), (0, 2), (1, 2), (1, 3), (2, 2), (2, 3)]
FIG1_LABELS = ["S0", "S1", "S2", "L0", "L1", "L2", "L3"]


@pytest.fixture
def fig1():
    return build_bipartite(3, 4, FIG1_EDGES, FIG1_LABELS)


def star(n):
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


class TestBuild:
    def test_figure1(self, fig1):
        assert fig1.n == 7 and fig1.graph.num_edges == 7
        assert (fig1.n0, fig1.n1) == (3, 4)
        assert fig1.part == (A0,) * 3 + (A1,) * 4

    def test_single_edge(self):
        g = build_bipartite(1, 1, [(0, 0)])
        assert g.edges() == [(0, 1)]

    def test_duplicate_edge(self):
        with pytest.raises(DuplicateEdge):
            build_bipartite(1, 1, [(0, 0), (0, 0)])

    def test_index_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            build_bipartite(2, 2, [(2, 0)])
        with pytest.raises(IndexOutOfRange):
            build_bipartite(2, 2, [(0, 5)])

    def test_intra_part_edge(self):
        from twomode.graph import BipartiteGraph
        with pytest.raises(IntraPartEdge):
            BipartiteGraph.from_edges([A0, A0, A1], [(0, 1)])

    def test_adjacency_sorted_and_symmetric(self, fig1):
        adj = fig1.graph.adjacency
        for v, nb in enumerate(adj):
            assert list(nb) == sorted(nb)
            assert all(v in adj[x] for x in nb)


class TestDistances:
    def test_figure1_from_s0(self, fig1):
        d = bfs_distances(fig1, 0)
        assert d[3] == 1  # L0
        assert d[1] == 2  # S1
        assert d[6] == 3  # L3
        assert d[0] == 0

    def test_star_center(self):
        assert bfs_distances(star(6), 0)[1:] == [1] * 5

    def test_unreachable(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        d = bfs_distances(g, 0)
        assert d[2] is UNREACHABLE and d[3] is UNREACHABLE
        with pytest.raises(DisconnectedGraph):
            total_distance(g, 0)
        with pytest.raises(DisconnectedGraph):
            closeness(g, 0)

    def test_total_distance(self, fig1):
        assert total_distance(fig1, 0) == 10
        assert total_distance(star(9), 0) == 8

    def test_extremal_small(self):
        h, root = build_extremal_tree(3, 2)
        ws = total_distances(h)
        assert ws[root] == 6
        assert sorted(ws[v] for v in h.nodes_in(A1)) == [7, 7]
        assert sorted(ws[v] for v in h.nodes_in(A0) if v != root) == [10, 10]

    @given(connected_graphs())
    @settings(max_examples=150, deadline=None)
    def test_matches_floyd_warshall(self, g):
        fw = floyd_warshall(g.n, g.edges())
        for v in range(g.n):
            assert bfs_distances(g, v) == fw[v]

    @given(connected_graphs())
    @settings(max_examples=100, deadline=None)
    def test_symmetry(self, g):
        d = [bfs_distances(g, v) for v in range(g.n)]
        assert all(d[a][b] == d[b][a] for a in range(g.n) for b in range(g.n))


class TestCentralization:
    def test_figure1_closeness(self, fig1):
        expected = [Fraction(1, 10), Fraction(1, 12), Fraction(1, 12),
                    Fraction(1, 15), Fraction(1, 15), Fraction(1, 9), Fraction(1, 15)]
        assert [closeness(fig1, v) for v in range(7)] == expected

    def test_figure1_centralization(self, fig1):
        assert abs(float(centralization(fig1, 5)) - 0.2000) < 1e-4
        assert abs(float(centralization(fig1, 3)) + 0.1111) < 1e-4
        # the exact value rounds to 0.00556; the published table truncates to 0.0055
        assert to_decimal(centralization(fig1, 1), 5) == "0.00556"

    def test_k11(self):
        g = build_bipartite(1, 1, [(0, 0)])
        assert closeness(g, 0) == closeness(g, 1) == 1
        assert centralization(g, 0) == 0

    def test_single_node(self):
        assert centralization(Graph.from_edges(1, []), 0) == 0

    def test_part_max(self, fig1):
        ties, value = part_max_centralization(fig1, A0)
        assert ties == (0,)
        assert to_decimal(value, 4) == "0.1222"
        ties, value = part_max_centralization(fig1, A1)
        assert ties == (5,)

    def test_part_max_extremal(self):
        h, root = build_extremal_tree(3, 2)
        assert part_max_centralization(h, A0) == ((root,), Fraction(19, 105))

    def test_davis_three_way_tie(self):
        g = load_fixture("davis").to_bipartite()
        ties, value = part_max_centralization(g, A0)
        names = [g.graph.labels[v] for v in ties]
        assert names == ["Mrs. Evelyn Jefferson", "Miss Theresa Anderson", "Mrs. Nora Fayette"]
        assert to_decimal(value, 5) == "0.07779"
        assert closeness(g, ties[0]) == Fraction(1, 60)

    def test_report_invariants(self, fig1):
        rep = centrality_report(fig1)
        assert all(c == Fraction(1, w) for c, w in zip(rep.C, rep.W))
        assert sum(rep.C1) == 0
        for v in range(7):
            assert rep.C1[v] == sum(rep.C[v] - rep.C[u] for u in range(7))

    @given(connected_graphs())
    @settings(max_examples=150, deadline=None)
    def test_zero_sum(self, g):
        assert sum(centralizations(g)) == 0

    @given(connected_graphs())
    @settings(max_examples=150, deadline=None)
    def test_argmax_is_argmin_w(self, g):
        c1 = centralizations(g)
        top = max(c1)
        assert tuple(v for v in range(g.n) if c1[v] == top) == closeness_argmax(g)

    @given(connected_graphs())
    @settings(max_examples=100, deadline=None)
    def test_decimal_round_trip(self, g):
        ws = total_distances(g)
        lcm = 1
        for w in ws:
            if w:
                lcm = math.lcm(lcm, w)
        for value in centralizations(g):
            assert abs(Fraction(to_decimal(value, 12)) - value) <= Fraction(1, 10 ** 12)
            assert lcm % value.denominator == 0


class TestDecimal:
    @pytest.mark.parametrize("value,prec,text", [
        (Fraction(1, 60), 5, "0.01667"),
        (Fraction(-1, 9), 4, "-0.1111"),
        (Fraction(1, 200), 2, "0.00"),
        (Fraction(3, 200), 2, "0.02"),
        (Fraction(7, 2), 0, "4"),
        (Fraction(-1, 3), 3, "-0.333"),
    ])
    def test_render(self, value, prec, text):
        assert to_decimal(value, prec) == text


class TestSpanningTree:
    def test_tree_unchanged(self):
        h, root = build_extremal_tree(5, 3)
        assert bfs_spanning_tree(h, root).edges() == h.edges()

    def test_four_cycle(self):
        c4 = cycle(4)
        t = bfs_spanning_tree(c4, 0)
        assert is_tree(t)
        assert sorted(t.degree(v) for v in range(4)) == [1, 1, 2, 2]
        assert centralization(c4, 0) == 0
        assert centralization(t, 0) > 0

    def test_figure1(self, fig1):
        t = bfs_spanning_tree(fig1, 0)
        assert t.graph.num_edges == 6 and is_tree(t)
        assert total_distance(t, 0) == 10
        assert t.part == fig1.part

    def test_lowest_parent(self):
        # node 3 is reachable from 1 and 2 at the same depth
        g = Graph.from_edges(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
        assert bfs_spanning_tree(g, 0).has_edge(1, 3)

    @given(connected_graphs())
    @settings(max_examples=150, deadline=None)
    def test_dominance(self, g):
        root = 0
        t = bfs_spanning_tree(g, root)
        wg, wt = total_distances(g), total_distances(t)
        assert wt[root] == wg[root]
        assert all(a >= b for a, b in zip(wt, wg))
        if g.num_edges >= g.n:
            assert centralization(t, root) > centralization(g, root)


def dense_eigenvector(g):
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1
    vals, vecs = np.linalg.eigh(a)
    x = np.abs(vecs[:, np.argmax(vals)])
    return x / x.sum()


class TestEigenvector:
    def test_star(self):
        x = eigenvector_centrality(star(7))
        assert np.all(x[0] > x[1:])
        assert x.sum() == pytest.approx(1.0)

    def test_cycle(self):
        assert eigenvector_centrality(cycle(8)) == pytest.approx(np.full(8, 1 / 8))

    def test_figure1_argmax(self, fig1):
        x = eigenvector_centrality(fig1)
        ref = dense_eigenvector(fig1.graph)
        assert x == pytest.approx(ref, abs=1e-9)
        assert int(np.argmax(x)) == int(np.argmax(ref))

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraph):
            eigenvector_centrality(Graph.from_edges(3, [(0, 1)]))

    def test_nonconvergence(self):
        from twomode.errors import NonConvergence
        with pytest.raises(NonConvergence):
            eigenvector_centrality(load_fixture("davis").to_bipartite(), tol=1e-15, max_iter=3)

    @given(connected_graphs(max_nodes=8))
    @settings(max_examples=60, deadline=None)
    def test_matches_dense(self, g):
        if g.n > 1:
            assert eigenvector_centrality(g) == pytest.approx(dense_eigenvector(g), abs=1e-8)


class TestMaxDegree:
    def test_star(self):
        assert max_degree_property_check(star(5))

    @pytest.mark.parametrize("n0,n1", [(1, 1), (3, 2), (14, 18), (18, 14), (7, 3), (2, 9)])
    def test_extremal(self, n0, n1):
        h, _ = build_extremal_tree(n0, n1)
        assert max_degree_property_check(h)

    def test_counterexample(self):
        # smallest one found by scanning all labelled trees; nodes 0 and 1 tie
        g = Graph.from_edges(6, [(0, 1), (0, 3), (0, 4), (1, 2), (2, 5)])
        assert closeness_argmax(g) == (0, 1)
        assert not max_degree_property_check(g)

    def test_search_finds_counterexample(self):
        from twomode.enumeration import enumerate_labeled_trees
        assert all(max_degree_property_check(g) for n in range(1, 6) for g in enumerate_labeled_trees(n))
        assert any(not max_degree_property_check(g) for g in enumerate_labeled_trees(6))
