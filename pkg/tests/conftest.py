import random

import pytest
from hypothesis import strategies as st

from twomode.enumeration import prufer_decode
from twomode.graph import BipartiteGraph, Graph, bfs_distances


def floyd_warshall(n, edges):
    """All-pairs hop distances, independent of the BFS code under test."""
    inf = float("inf")
    d = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for a, b in edges:
        d[a][b] = d[b][a] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def tree_as_bipartite(n, edges):
    """2-colour a tree by depth parity from node 0."""
    g = Graph.from_edges(n, edges)
    part = [d % 2 for d in bfs_distances(g, 0)]
    return BipartiteGraph.from_edges(part, edges)


def random_tree_edges(rng: random.Random, n: int):
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)


@st.composite
def trees(draw, min_nodes=2, max_nodes=12):
    n = draw(st.integers(min_nodes, max_nodes))
    if n == 2:
        return tree_as_bipartite(2, [(0, 1)])
    code = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return tree_as_bipartite(n, prufer_decode(code, n))


@st.composite
def connected_graphs(draw, max_nodes=9):
    """A random tree plus a few extra edges."""
    n = draw(st.integers(1, max_nodes))
    if n == 1:
        return Graph.from_edges(1, [])
    code = draw(st.lists(st.integers(0, n - 1), min_size=max(n - 2, 0), max_size=max(n - 2, 0)))
    edges = set(prufer_decode(code, n)) if n > 2 else {(0, 1)}
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=6))
    for a, b in extra:
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return Graph.from_edges(n, sorted(edges))


@pytest.fixture
def rng():
    return random.Random(20261018)


# one line per acceptance criterion, filled by test_acceptance.py
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[number])
