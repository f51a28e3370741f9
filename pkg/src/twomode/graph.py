"""Immutable undirected graphs, hop distances and closeness centralization.

All centrality values are exact :class:`fractions.Fraction` instances. For a
connected graph ``G`` and a node ``v``::

    W(v)   = sum of hop distances from v to every node
    C(v)   = 1 / W(v)
    C1(v)  = sum over u of [C(v) - C(u)] = n * C(v) - sum_u C(u)

Decimal renderings are produced only on request (:func:`to_decimal`).
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DisconnectedGraph,
    DuplicateEdge,
    IndexOutOfRange,
    IntraPartEdge,
    NonConvergence,
)

A0 = 0
A1 = 1

UNREACHABLE = math.inf


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on nodes ``0..n-1``.

    ``adjacency[v]`` is the ascending tuple of neighbours of ``v``.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise IndexOutOfRange(f"edge ({a}, {b}) outside 0..{n - 1}")
            if a == b:
                raise DuplicateEdge(f"self-loop at node {a}")
            if b in nbrs[a]:
                raise DuplicateEdge(f"edge ({a}, {b}) given twice")
            nbrs[a].add(b)
            nbrs[b].add(a)
        if labels is None:
            labels = [str(i) for i in range(n)]
        elif len(labels) != n:
            raise IndexOutOfRange(f"expected {n} labels, got {len(labels)}")
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs), tuple(labels))

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(a, b)`` with ``a < b``, sorted."""
        return [(a, b) for a in range(self.n) for b in self.adjacency[a] if a < b]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, a: int, b: int) -> bool:
        return b in self.adjacency[a]


@dataclass(frozen=True)
class BipartiteGraph:
    """A graph together with a two-part node partition.

    ``part[v]`` is :data:`A0` or :data:`A1`; every edge joins the two parts.
    """

    graph: Graph
    part: tuple[int, ...]

    def __post_init__(self):
        if len(self.part) != self.graph.n:
            raise IndexOutOfRange("part vector length differs from node count")
        for a, b in self.graph.edges():
            if self.part[a] == self.part[b]:
                raise IntraPartEdge(f"edge ({self.graph.labels[a]}, {self.graph.labels[b]}) inside one part")

    @classmethod
    def from_edges(cls, part: Sequence[int], edges: Iterable[tuple[int, int]],
                   labels: Sequence[str] | None = None) -> BipartiteGraph:
        return cls(Graph.from_edges(len(part), edges, labels), tuple(part))

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def n0(self) -> int:
        return self.part.count(A0)

    @property
    def n1(self) -> int:
        return self.part.count(A1)

    def nodes_in(self, part: int) -> list[int]:
        return [v for v in range(self.graph.n) if self.part[v] == part]

    def edges(self) -> list[tuple[int, int]]:
        return self.graph.edges()

    def with_edges(self, edges: Iterable[tuple[int, int]]) -> BipartiteGraph:
        """Same nodes, labels and partition, different edge set."""
        return BipartiteGraph.from_edges(self.part, edges, self.graph.labels)


def build_bipartite(n0: int, n1: int, edges: Iterable[tuple[int, int]],
                    labels: Sequence[str] | None = None) -> BipartiteGraph:
    """Build a bipartite graph from ``(left, right)`` index pairs.

    Left index ``i`` becomes node ``i`` (part A0), right index ``j`` becomes
    node ``n0 + j`` (part A1). ``labels``, when given, covers all ``n0 + n1``
    nodes in that order.

    >>> g = build_bipartite(1, 1, [(0, 0)])
    >>> g.edges()
    [(0, 1)]
    """
    if n0 < 0 or n1 < 0:
        raise IndexOutOfRange("part sizes must be nonnegative")
    mapped = []
    for i, j in edges:
        if not (0 <= i < n0):
            raise IndexOutOfRange(f"left index {i} outside 0..{n0 - 1}")
        if not (0 <= j < n1):
            raise IndexOutOfRange(f"right index {j} outside 0..{n1 - 1}")
        mapped.append((i, n0 + j))
    part = (A0,) * n0 + (A1,) * n1
    return BipartiteGraph.from_edges(part, mapped, labels)


def _as_graph(g: Graph | BipartiteGraph) -> Graph:
    return g.graph if isinstance(g, BipartiteGraph) else g


# -- distances ---------------------------------------------------------------

def bfs_distances(g: Graph | BipartiteGraph, v: int) -> list:
    """Hop distances from ``v``; unreachable nodes get :data:`UNREACHABLE`."""
    g = _as_graph(g)
    if not 0 <= v < g.n:
        raise IndexOutOfRange(f"node {v} outside 0..{g.n - 1}")
    adj = g.adjacency
    dist: list = [UNREACHABLE] * g.n
    dist[v] = 0
    queue = deque([v])
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in adj[x]:
            if dist[y] is UNREACHABLE:
                dist[y] = dx
                queue.append(y)
    return dist


def is_connected(g: Graph | BipartiteGraph) -> bool:
    g = _as_graph(g)
    if g.n == 0:
        return True
    return UNREACHABLE not in bfs_distances(g, 0)


def is_tree(g: Graph | BipartiteGraph) -> bool:
    g = _as_graph(g)
    return g.n > 0 and g.num_edges == g.n - 1 and is_connected(g)


def total_distance(g: Graph | BipartiteGraph, v: int) -> int:
    """``W(v)``, the sum of hop distances from ``v`` to all nodes."""
    dist = bfs_distances(g, v)
    if UNREACHABLE in dist:
        raise DisconnectedGraph("total distance is undefined on a disconnected graph")
    return sum(dist)


def total_distances(g: Graph | BipartiteGraph) -> tuple[int, ...]:
    """``W`` for every node, in NodeId order."""
    g = _as_graph(g)
    return tuple(total_distance(g, v) for v in range(g.n))


def closeness(g: Graph | BipartiteGraph, v: int) -> Fraction:
    w = total_distance(g, v)
    # a single node has W = 0; its closeness is taken as 0 so that C1 = 0
    return Fraction(1, w) if w else Fraction(0)


def _closeness_all(ws: Sequence[int]) -> list[Fraction]:
    return [Fraction(1, w) if w else Fraction(0) for w in ws]


def centralization(g: Graph | BipartiteGraph, v: int) -> Fraction:
    """Closeness centralization ``C1(v; G)`` as an exact rational."""
    g = _as_graph(g)
    cs = _closeness_all(total_distances(g))
    return g.n * cs[v] - sum(cs)


def centralizations(g: Graph | BipartiteGraph) -> list[Fraction]:
    g = _as_graph(g)
    cs = _closeness_all(total_distances(g))
    total = sum(cs)
    return [g.n * c - total for c in cs]


def centralization_from_w(ws: Sequence[int], v: int) -> Fraction:
    """``C1(v)`` given the full ``W`` vector of a connected graph."""
    cs = _closeness_all(ws)
    return len(ws) * cs[v] - sum(cs)


# -- reports -----------------------------------------------------------------

def to_decimal(value: Fraction, precision: int) -> str:
    """Render an exact rational with ``precision`` decimals (round half even)."""
    scaled = round(Fraction(value) * 10 ** precision)
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(precision + 1, "0")
    if precision == 0:
        return sign + digits
    return f"{sign}{digits[:-precision]}.{digits[-precision:]}"


@dataclass(frozen=True)
class CentralityReport:
    """Per-node ``W``, ``C`` and ``C1`` of a connected graph."""

    labels: tuple[str, ...]
    W: tuple[int, ...]
    C: tuple[Fraction, ...]
    C1: tuple[Fraction, ...]
    part: tuple[int, ...] | None = None

    def argmax(self, nodes: Iterable[int] | None = None) -> tuple[tuple[int, ...], Fraction]:
        """All maximizers of ``C1`` among ``nodes`` (default: every node)."""
        nodes = list(range(len(self.W))) if nodes is None else list(nodes)
        if not nodes:
            raise IndexOutOfRange("argmax over an empty node set")
        best = max(self.C1[v] for v in nodes)
        return tuple(sorted(v for v in nodes if self.C1[v] == best)), best

    def part_argmax(self, part: int) -> tuple[tuple[int, ...], Fraction]:
        if self.part is None:
            raise IndexOutOfRange("report was built without a partition")
        return self.argmax(v for v, p in enumerate(self.part) if p == part)

    def decimal(self, field: str, v: int, precision: int = 5) -> str:
        return to_decimal(getattr(self, field)[v], precision)


def centrality_report(g: Graph | BipartiteGraph) -> CentralityReport:
    part = g.part if isinstance(g, BipartiteGraph) else None
    graph = _as_graph(g)
    ws = total_distances(graph)
    cs = _closeness_all(ws)
    total = sum(cs)
    c1 = tuple(graph.n * c - total for c in cs)
    return CentralityReport(graph.labels, ws, tuple(cs), c1, part)


def part_max_centralization(bg: BipartiteGraph, part: int) -> tuple[tuple[int, ...], Fraction]:
    """Nodes of ``part`` attaining the largest ``C1``, with that value.

    Ties are all returned, ascending; the first entry is the canonical
    representative.
    """
    return centrality_report(bg).part_argmax(part)


# -- structural helpers ------------------------------------------------------

def bfs_spanning_tree(g: Graph | BipartiteGraph, root: int):
    """Breadth-first spanning tree rooted at ``root``.

    Each node's parent is its lowest-numbered neighbour one level closer to
    the root. Returns the same type as ``g`` (partition preserved).
    """
    graph = _as_graph(g)
    dist = bfs_distances(graph, root)
    if UNREACHABLE in dist:
        raise DisconnectedGraph("no spanning tree of a disconnected graph")
    edges = []
    for v in range(graph.n):
        if v == root:
            continue
        parent = min(x for x in graph.adjacency[v] if dist[x] == dist[v] - 1)
        edges.append((parent, v))
    if isinstance(g, BipartiteGraph):
        return g.with_edges(edges)
    return Graph.from_edges(graph.n, edges, graph.labels)


def eigenvector_centrality(g: Graph | BipartiteGraph, tol: float = 1e-12, max_iter: int = 100_000) -> np.ndarray:
    """Principal eigenvector of the adjacency matrix, scaled to sum 1.

    Power iteration runs on ``A + I``: bipartite spectra are symmetric, so
    plain iteration on ``A`` oscillates between the ``+lambda`` and
    ``-lambda`` eigenvectors. The shift leaves the eigenvectors unchanged.
    """
    graph = _as_graph(g)
    if not is_connected(graph):
        raise DisconnectedGraph("eigenvector centrality needs a connected graph")
    n = graph.n
    if n == 1:
        return np.ones(1)
    a = np.eye(n)
    for u, v in graph.edges():
        a[u, v] = a[v, u] = 1.0
    x = np.full(n, 1.0 / n)
    for _ in range(max_iter):
        y = a @ x
        y /= y.sum()
        if np.abs(y - x).max() < tol:
            return y
        x = y
    raise NonConvergence(f"power iteration did not reach tol={tol} in {max_iter} steps")


def closeness_argmax(g: Graph | BipartiteGraph) -> tuple[int, ...]:
    """Nodes of minimum total distance (equivalently, maximum ``C1``)."""
    ws = total_distances(g)
    best = min(ws)
    return tuple(v for v, w in enumerate(ws) if w == best)


def max_degree_property_check(g: Graph | BipartiteGraph) -> bool:
    """True iff every closeness-maximizing node has maximum degree."""
    graph = _as_graph(g)
    top = max(graph.degree(v) for v in range(graph.n))
    return all(graph.degree(v) == top for v in closeness_argmax(graph))
