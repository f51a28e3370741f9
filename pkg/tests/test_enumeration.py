import itertools
from fractions import Fraction

import networkx as nx
import pytest

from conftest import tree_as_bipartite
from twomode.enumeration import (
    EnumerationSpec,
    eigenvector_conjecture_scan,
    enumerate_bipartite_trees,
    enumerate_connected_bipartite_graphs,
    enumerate_labeled_trees,
    is_isomorphic_to_extremal,
    prufer_decode,
    rooted_tree_canonical_form,
    scoins_count,
    star_centralization,
    verify_bipartite_theorem,
    verify_star_theorem,
)
from twomode.errors import InvalidSize, SizeLimitExceeded
from twomode.extremal import build_extremal_tree, closed_form_centralization
from twomode.graph import A0, build_bipartite, centralization, is_tree


def subset_oracle(n0, n1, trees_only):
    """Brute force over edge subsets of K(n0, n1), checked with networkx."""
    slots = [(i, n0 + j) for i in range(n0) for j in range(n1)]
    sizes = [n0 + n1 - 1] if trees_only else range(n0 + n1 - 1, len(slots) + 1)
    found = set()
    for k in sizes:
        for es in itertools.combinations(slots, k):
            g = nx.Graph(es)
            g.add_nodes_from(range(n0 + n1))
            if nx.is_connected(g):
                found.add(tuple(sorted(es)))
    return found


def edge_sets(graphs):
    return [tuple(sorted(g.edges())) for g in graphs]


class TestTrees:
    @pytest.mark.parametrize("n0,n1,count", [(1, 1, 1), (2, 2, 4), (3, 2, 12), (2, 3, 12), (1, 6, 1)])
    def test_counts(self, n0, n1, count):
        assert sum(1 for _ in enumerate_bipartite_trees(n0, n1)) == count == scoins_count(n0, n1)

    @pytest.mark.parametrize("n0,n1", [(a, b) for a in range(1, 9) for b in range(1, 9) if a + b <= 10])
    def test_scoins(self, n0, n1):
        seen = edge_sets(enumerate_bipartite_trees(n0, n1))
        assert len(seen) == len(set(seen)) == scoins_count(n0, n1)

    @pytest.mark.parametrize("n0,n1", [(2, 3), (3, 3), (4, 2), (3, 4)])
    def test_matches_subset_oracle(self, n0, n1):
        assert set(edge_sets(enumerate_bipartite_trees(n0, n1))) == subset_oracle(n0, n1, True)

    def test_outputs_are_trees(self):
        for g in enumerate_bipartite_trees(3, 4):
            assert is_tree(g) and (g.n0, g.n1) == (3, 4)


class TestGraphs:
    @pytest.mark.parametrize("n0,n1,count", [(1, 1, 1), (2, 2, 5), (1, 4, 1)])
    def test_counts(self, n0, n1, count):
        assert sum(1 for _ in enumerate_connected_bipartite_graphs(n0, n1)) == count

    @pytest.mark.parametrize("n0,n1", [(2, 3), (3, 3), (2, 4)])
    def test_matches_subset_oracle(self, n0, n1):
        seen = edge_sets(enumerate_connected_bipartite_graphs(n0, n1))
        assert len(seen) == len(set(seen))
        assert set(seen) == subset_oracle(n0, n1, False)


class TestLabeledTrees:
    @pytest.mark.parametrize("n", range(1, 8))
    def test_cayley(self, n):
        seen = [tuple(sorted(g.edges())) for g in enumerate_labeled_trees(n)]
        assert len(set(seen)) == len(seen) == n ** max(n - 2, 0)

    def test_prufer_known(self):
        assert sorted(prufer_decode([3, 3, 3], 5)) == [(0, 3), (1, 3), (2, 3), (3, 4)]


class TestIsomorphism:
    def test_canonical_form_ignores_labels(self):
        a = [[1, 2], [0, 3], [0], [1]]
        b = [[2, 3], [2], [0, 1], [0]]
        assert rooted_tree_canonical_form(a, 0) == rooted_tree_canonical_form(b, 0)
        assert rooted_tree_canonical_form(a, 0) != rooted_tree_canonical_form(a, 2)

    @pytest.mark.parametrize("n0,n1", [(1, 1), (3, 2), (6, 3), (4, 7)])
    def test_extremal_is_extremal(self, n0, n1):
        h, root = build_extremal_tree(n0, n1)
        assert is_isomorphic_to_extremal(h, root)

    def test_unbalanced_is_not(self):
        g = build_bipartite(3, 2, [(0, 0), (0, 1), (1, 0), (2, 0)])
        assert not is_isomorphic_to_extremal(g, 0)

    def test_wrong_root(self):
        h, _ = build_extremal_tree(3, 2)
        assert not is_isomorphic_to_extremal(h, 1)

    def test_cyclic_is_not(self):
        g = build_bipartite(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)])
        assert not is_isomorphic_to_extremal(g, 0)


def brute_best(n0, n1, gen):
    return max(centralization(g, v) for g in gen(n0, n1) for v in g.nodes_in(A0))


class TestVerify:
    @pytest.mark.parametrize("n0,n1", [(1, 1), (3, 2), (2, 3), (4, 3)])
    def test_trees(self, n0, n1):
        rep = verify_bipartite_theorem(EnumerationSpec(n0, n1, "trees"))
        assert rep.verdict == "match" and rep.maximizers_isomorphic
        assert rep.instances == scoins_count(n0, n1)
        assert rep.best_value == brute_best(n0, n1, enumerate_bipartite_trees)

    def test_trees_4_3_summary(self):
        rep = verify_bipartite_theorem(EnumerationSpec(4, 3, "trees"))
        assert (rep.instances, rep.best_value, rep.maximizers) == (432, Fraction(49, 204), 24)

    @pytest.mark.parametrize("n0,n1", [(2, 2), (3, 2), (2, 3), (3, 3)])
    def test_graphs(self, n0, n1):
        rep = verify_bipartite_theorem(EnumerationSpec(n0, n1, "graphs"))
        assert rep.verdict == "match"
        assert rep.best_value == brute_best(n0, n1, enumerate_connected_bipartite_graphs)

    def test_best_instance_is_lexicographic_minimum(self):
        rep = verify_bipartite_theorem(EnumerationSpec(3, 2, "trees"))
        edges, root = rep.best_instance
        g = build_bipartite(3, 2, [])
        g = g.with_edges(list(edges))
        assert centralization(g, root) == rep.best_value
        candidates = sorted(
            (tuple(t.edges()), v) for t in enumerate_bipartite_trees(3, 2)
            for v in t.nodes_in(A0) if centralization(t, v) == rep.best_value)
        assert rep.best_instance == candidates[0]

    def test_report_dict(self):
        d = verify_bipartite_theorem(EnumerationSpec(3, 2)).as_dict()
        assert d["verdict"] == "match" and d["closed_form"] == "19/105"
        assert all(isinstance(e, str) and "-" in e for e in d["best_edges"])
        assert "elapsed" not in d

    @pytest.mark.parametrize("mode", ["trees", "graphs"])
    def test_jobs_deterministic(self, mode):
        one = verify_bipartite_theorem(EnumerationSpec(3, 3, mode, jobs=1))
        many = verify_bipartite_theorem(EnumerationSpec(3, 3, mode, jobs=3))
        assert one == many and one.as_dict() == many.as_dict()


class TestStar:
    @pytest.mark.parametrize("n,value", [(2, 0), (3, Fraction(1, 3)), (4, Fraction(2, 5)), (5, Fraction(3, 7))])
    def test_small(self, n, value):
        rep = verify_star_theorem(n)
        assert rep.verdict == "match" and rep.best_value == value == star_centralization(n)
        assert rep.maximizers_isomorphic

    def test_connected_counts(self):
        assert [verify_star_theorem(n).instances for n in (2, 3, 4, 5)] == [1, 4, 38, 728]

    def test_star_formula(self):
        g = tree_as_bipartite(6, [(0, i) for i in range(1, 6)])
        assert centralization(g, 0) == star_centralization(6) == Fraction(4, 9)

    def test_invalid(self):
        with pytest.raises(InvalidSize):
            verify_star_theorem(1)
        with pytest.raises(SizeLimitExceeded):
            verify_star_theorem(8)
        with pytest.raises(InvalidSize):
            star_centralization(1)


class TestGuards:
    @pytest.mark.parametrize("args,exc", [
        ((7, 6, "trees"), SizeLimitExceeded),
        ((5, 4, "graphs"), SizeLimitExceeded),
        ((0, 3, "trees"), InvalidSize),
        ((3, 3, "forests"), InvalidSize),
    ])
    def test_rejects(self, args, exc):
        with pytest.raises(exc):
            EnumerationSpec(*args)

    def test_jobs(self):
        with pytest.raises(InvalidSize):
            EnumerationSpec(2, 2, "trees", 0)

    def test_limits_inclusive(self):
        EnumerationSpec(6, 6, "trees")
        EnumerationSpec(4, 4, "graphs")


class TestEigenvectorScan:
    def test_small(self):
        scan = eigenvector_conjecture_scan(EnumerationSpec(3, 2))
        assert scan.instances == 12 and scan.normalization == "sum"
        assert scan.best_value >= scan.extremal_value - 1e-9
        assert scan.extremal_attains_max == (scan.best_value <= scan.extremal_value + 1e-9)
        d = scan.as_dict()
        assert d["scan"] == "trees 3 2" and len(d["counterexamples"]) <= 20

    def test_single_edge(self):
        scan = eigenvector_conjecture_scan(EnumerationSpec(1, 1))
        assert scan.instances == 1
        assert scan.extremal_value == pytest.approx(0.0, abs=1e-9)
        assert scan.extremal_attains_max and not scan.counterexamples

    def test_graph_mode(self):
        scan = eigenvector_conjecture_scan(EnumerationSpec(2, 2, "graphs"))
        assert scan.instances == 5


def test_closed_form_is_best_over_small_graphs():
    for n0 in range(1, 4):
        for n1 in range(1, 4):
            assert brute_best(n0, n1, enumerate_connected_bipartite_graphs) == closed_form_centralization(n0, n1)
