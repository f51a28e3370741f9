"""Exhaustive enumeration of small graphs and brute-force theorem checks.

Bipartite trees are produced from Prüfer codes. A tree on parts of sizes
``n0`` and ``n1`` has a code in which A0 labels occur ``n1 - 1`` times in
total and A1 labels ``n0 - 1`` times, and the decoding only ever joins a
leaf to the next code entry. The generator fixes how often each label
occurs, then fills the code left to right, only ever choosing an entry from
the part opposite to the leaf being removed. Every labelled bipartite tree
comes out exactly once, and dead branches are cut early.

Connected bipartite graphs come from edge masks over the ``n0 * n1``
possible edges, filtered by a connectivity test.

The verifiers reduce over shards with an order-independent rule (largest
exact value, then smallest canonical instance), so a run with ``jobs=8``
reports exactly what ``jobs=1`` does.
"""

from __future__ import annotations

import heapq
import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .errors import InvalidSize, SizeLimitExceeded
from .extremal import build_extremal_tree, closed_form_centralization
from .graph import A0, A1, BipartiteGraph, Graph, eigenvector_centrality

MAX_TREE_NODES = 12
MAX_GRAPH_SLOTS = 16
MAX_STAR_NODES = 7


@dataclass(frozen=True)
class EnumerationSpec:
    n0: int
    n1: int
    mode: str = "trees"
    jobs: int = 1

    def __post_init__(self):
        if self.mode not in ("trees", "graphs"):
            raise InvalidSize(f"unknown enumeration mode {self.mode!r}")
        if self.n0 < 1 or self.n1 < 1:
            raise InvalidSize("part sizes must be positive")
        if self.jobs < 1:
            raise InvalidSize("jobs must be at least 1")
        if self.mode == "trees" and self.n0 + self.n1 > MAX_TREE_NODES:
            raise SizeLimitExceeded(f"trees mode is limited to n0 + n1 <= {MAX_TREE_NODES}")
        if self.mode == "graphs" and self.n0 * self.n1 > MAX_GRAPH_SLOTS:
            raise SizeLimitExceeded(f"graphs mode is limited to n0 * n1 <= {MAX_GRAPH_SLOTS}")


def scoins_count(n0: int, n1: int) -> int:
    """Number of spanning trees of the complete bipartite graph K(n0, n1)."""
    return n0 ** (n1 - 1) * n1 ** (n0 - 1)


# -- trees ---------------------------------------------------------------------

def prufer_decode(code, n: int) -> list[tuple[int, int]]:
    """Edges of the labelled tree on ``0..n-1`` with Prüfer code ``code``."""
    degree = [1] * n
    for s in code:
        degree[s] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for s in code:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, s), max(leaf, s)))
        degree[s] -= 1
        if degree[s] == 1:
            heapq.heappush(leaves, s)
    a, b = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((a, b))
    return sorted(edges)


def enumerate_labeled_trees(n: int) -> Iterator[Graph]:
    """All ``n ** (n - 2)`` labelled trees on ``n`` nodes (``n <= 9``)."""
    if n < 1:
        raise InvalidSize("need at least one node")
    if n > 9:
        raise SizeLimitExceeded("labelled tree enumeration is limited to n <= 9")
    if n == 1:
        yield Graph.from_edges(1, [])
        return
    for code in itertools.product(range(n), repeat=n - 2):
        yield Graph.from_edges(n, prufer_decode(code, n))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` nonnegative summands."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _occurrence_vectors(n0: int, n1: int) -> list[tuple[int, ...]]:
    """How often each label appears in the Prüfer code, for every degree
    sequence a bipartite tree on these parts can have."""
    return [a + b for a in _compositions(n1 - 1, n0) for b in _compositions(n0 - 1, n1)]


def _trees_for_occurrences(n0: int, n1: int, occ: tuple[int, ...]) -> Iterator[list[tuple[int, int]]]:
    n = n0 + n1
    left = list(occ)
    removed = [False] * n
    edges: list[tuple[int, int]] = []

    def side(v):
        return A0 if v < n0 else A1

    def rec(step):
        if step == n - 2:
            a, b = [v for v in range(n) if not removed[v]]
            if side(a) != side(b):
                yield sorted(edges + [(a, b)])
            return
        leaf = next(v for v in range(n) if not removed[v] and left[v] == 0)
        lo, hi = (n0, n) if side(leaf) == A0 else (0, n0)
        for s in range(lo, hi):
            if left[s] > 0:
                left[s] -= 1
                removed[leaf] = True
                edges.append((min(leaf, s), max(leaf, s)))
                yield from rec(step + 1)
                edges.pop()
                removed[leaf] = False
                left[s] += 1

    yield from rec(0)


def _tree_edge_lists(n0: int, n1: int, shard: int = 0, jobs: int = 1) -> Iterator[list[tuple[int, int]]]:
    if n0 + n1 == 2:
        if shard == 0:
            yield [(0, 1)]
        return
    for i, occ in enumerate(_occurrence_vectors(n0, n1)):
        if i % jobs == shard:
            yield from _trees_for_occurrences(n0, n1, occ)


def _parts(n0: int, n1: int) -> tuple[int, ...]:
    return (A0,) * n0 + (A1,) * n1


def enumerate_bipartite_trees(n0: int, n1: int) -> Iterator[BipartiteGraph]:
    """Every labelled spanning tree of K(n0, n1), each exactly once.

    Nodes ``0..n0-1`` form A0 and ``n0..n0+n1-1`` form A1.
    """
    EnumerationSpec(n0, n1, "trees")
    part = _parts(n0, n1)
    for edges in _tree_edge_lists(n0, n1):
        yield BipartiteGraph.from_edges(part, edges)


# -- connected graphs ------------------------------------------------------------

def _slots(n0: int, n1: int) -> list[tuple[int, int]]:
    return [(i, n0 + j) for i in range(n0) for j in range(n1)]


def _mask_adjacency(n: int, slots, mask: int) -> list[int]:
    adj = [0] * n
    for k, (a, b) in enumerate(slots):
        if mask >> k & 1:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
    return adj


def _bit_total_distance(adj: list[int], n: int, v: int) -> int | None:
    """``W(v)`` on a bitmask adjacency, or ``None`` if some node is unreachable."""
    full = (1 << n) - 1
    seen = frontier = 1 << v
    total = d = 0
    while frontier:
        d += 1
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= frontier
        total += d * bin(frontier).count("1")
    return total if seen == full else None


def _connected_graph_masks(n: int, slots, shard: int = 0, jobs: int = 1) -> Iterator[tuple[int, list[int]]]:
    for mask in range(shard, 1 << len(slots), jobs):
        adj = _mask_adjacency(n, slots, mask)
        if _bit_total_distance(adj, n, 0) is not None:
            yield mask, adj


def enumerate_connected_bipartite_graphs(n0: int, n1: int) -> Iterator[BipartiteGraph]:
    """Every connected spanning subgraph of K(n0, n1), each exactly once."""
    EnumerationSpec(n0, n1, "graphs")
    slots = _slots(n0, n1)
    part = _parts(n0, n1)
    for mask, _ in _connected_graph_masks(n0 + n1, slots):
        yield BipartiteGraph.from_edges(part, [e for k, e in enumerate(slots) if mask >> k & 1])


# -- canonical forms -------------------------------------------------------------

def rooted_tree_canonical_form(adjacency, root: int) -> str:
    """AHU string of a tree rooted at ``root``; equal strings iff the rooted
    trees are isomorphic."""
    def canon(v, parent):
        kids = sorted(canon(c, v) for c in adjacency[v] if c != parent)
        return "(" + "".join(kids) + ")"
    return canon(root, -1)


def _adjacency_from_edges(n: int, edges) -> list[list[int]]:
    adj = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    return adj


def is_isomorphic_to_extremal(g: BipartiteGraph, root: int) -> bool:
    """Whether ``(g, root)`` is a copy of ``(H(u; n0, n1), u)`` with the root
    in the same part as ``u``."""
    if g.part[root] != A0:
        return False
    h, hroot = build_extremal_tree(g.n0, g.n1)
    if g.graph.num_edges != h.graph.num_edges:
        return False
    if sorted(map(len, g.graph.adjacency)) != sorted(map(len, h.graph.adjacency)):
        return False
    return (rooted_tree_canonical_form(g.graph.adjacency, root)
            == rooted_tree_canonical_form(h.graph.adjacency, hroot))


# -- verification ----------------------------------------------------------------

def _tree_total_distances(adj: list[list[int]], n: int) -> list[int]:
    """All ``W`` values of a tree via rerooting: ``W(c) = W(p) + n - 2|T_c|``."""
    order, parent = [0], [-1] * n
    parent[0] = 0
    for v in order:
        for c in adj[v]:
            if parent[c] < 0:
                parent[c] = v
                order.append(c)
    size = [1] * n
    depth = [0] * n
    for v in order[1:]:
        depth[v] = depth[parent[v]] + 1
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]
    w = [0] * n
    w[0] = sum(depth)
    for v in order[1:]:
        w[v] = w[parent[v]] + n - 2 * size[v]
    return w


def _best_in_a0(ws: list[int], n0: int) -> tuple[Fraction, list[int]]:
    low = min(ws[:n0])
    inv = sum(Fraction(1, w) for w in ws)
    return Fraction(len(ws), low) - inv, [v for v in range(n0) if ws[v] == low]


@dataclass
class _Partial:
    """Per-shard reduction state; merging is associative and commutative."""

    instances: int = 0
    best: Fraction | None = None
    best_instance: tuple | None = None
    maximizers: int = 0
    all_iso: bool = True

    def offer(self, value, instance, iso_check):
        if self.best is not None and value < self.best:
            return
        if self.best is None or value > self.best:
            self.best, self.best_instance, self.maximizers, self.all_iso = value, instance, 0, True
        self.maximizers += 1
        self.best_instance = min(self.best_instance, instance)
        if self.all_iso and not iso_check():
            self.all_iso = False

    def merge(self, other: _Partial) -> _Partial:
        out = _Partial(self.instances + other.instances)
        parts = [p for p in (self, other) if p.best is not None]
        if not parts:
            return out
        top = max(p.best for p in parts)
        winners = [p for p in parts if p.best == top]
        out.best = top
        out.best_instance = min(p.best_instance for p in winners)
        out.maximizers = sum(p.maximizers for p in winners)
        out.all_iso = all(p.all_iso for p in winners)
        return out


def _scan_trees(n0: int, n1: int, shard: int, jobs: int) -> _Partial:
    n = n0 + n1
    part = _parts(n0, n1)
    acc = _Partial()
    for edges in _tree_edge_lists(n0, n1, shard, jobs):
        adj = _adjacency_from_edges(n, edges)
        ws = _tree_total_distances(adj, n)
        value, roots = _best_in_a0(ws, n0)
        acc.instances += 1
        for r in roots:
            acc.offer(value, (tuple(edges), r),
                      lambda r=r, e=edges: is_isomorphic_to_extremal(BipartiteGraph.from_edges(part, e), r))
    return acc


def _scan_graphs(n0: int, n1: int, shard: int, jobs: int) -> _Partial:
    n = n0 + n1
    slots = _slots(n0, n1)
    part = _parts(n0, n1)
    acc = _Partial()
    for mask, adj in _connected_graph_masks(n, slots, shard, jobs):
        ws = [_bit_total_distance(adj, n, v) for v in range(n)]
        value, roots = _best_in_a0(ws, n0)
        edges = tuple(e for k, e in enumerate(slots) if mask >> k & 1)
        acc.instances += 1
        for r in roots:
            acc.offer(value, (edges, r),
                      lambda r=r, e=edges: is_isomorphic_to_extremal(BipartiteGraph.from_edges(part, e), r))
    return acc


def _run_sharded(func, args, jobs: int) -> _Partial:
    if jobs == 1:
        return func(*args, 0, 1)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(func, *args, shard, jobs) for shard in range(jobs)]
        partials = [f.result() for f in futures]
    acc = _Partial()
    for p in partials:
        acc = acc.merge(p)
    return acc


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of an exhaustive scan against a closed-form target.

    ``best_instance`` is ``(edges, root)`` with edges as sorted node-id pairs,
    the lexicographically smallest among all maximizers.
    """

    label: str
    instances: int
    best_value: Fraction
    best_instance: tuple
    target: Fraction
    maximizers: int
    maximizers_isomorphic: bool | None
    elapsed: float = field(default=0.0, compare=False)

    @property
    def verdict(self) -> str:
        return "match" if self.best_value == self.target else "mismatch"

    def as_dict(self) -> dict:
        edges, root = self.best_instance
        return {
            "scan": self.label,
            "instances": self.instances,
            "best_value": str(self.best_value),
            "best_root": root,
            "best_edges": [f"{a}-{b}" for a, b in edges],
            "closed_form": str(self.target),
            "verdict": self.verdict,
            "maximizers": self.maximizers,
            "maximizers_isomorphic_to_H": self.maximizers_isomorphic,
        }


def verify_bipartite_theorem(spec: EnumerationSpec) -> VerificationReport:
    """Maximize ``C1(v; G)`` over every enumerated ``G`` and ``v`` in A0, and
    compare with the extremal tree's closed form."""
    start = time.perf_counter()
    func = _scan_trees if spec.mode == "trees" else _scan_graphs
    acc = _run_sharded(func, (spec.n0, spec.n1), spec.jobs)
    return VerificationReport(
        label=f"{spec.mode} {spec.n0} {spec.n1}",
        instances=acc.instances,
        best_value=acc.best,
        best_instance=acc.best_instance,
        target=closed_form_centralization(spec.n0, spec.n1),
        maximizers=acc.maximizers,
        maximizers_isomorphic=acc.all_iso,
        elapsed=time.perf_counter() - start,
    )


def star_centralization(n: int) -> Fraction:
    """``C1`` of the centre of the star on ``n`` nodes: ``1 - (n-1)/(2n-3)``."""
    if n < 2:
        raise InvalidSize("a star needs at least 2 nodes")
    return 1 - Fraction(n - 1, 2 * n - 3)


def _scan_all_graphs(n: int, shard: int, jobs: int) -> _Partial:
    slots = list(itertools.combinations(range(n), 2))
    acc = _Partial()
    for mask, adj in _connected_graph_masks(n, slots, shard, jobs):
        ws = [_bit_total_distance(adj, n, v) for v in range(n)]
        low = min(ws)
        value = Fraction(n, low) - sum(Fraction(1, w) for w in ws)
        edges = tuple(e for k, e in enumerate(slots) if mask >> k & 1)
        acc.instances += 1
        for r in (v for v in range(n) if ws[v] == low):
            # a maximizer is a star iff it has n-1 edges and the root sees all
            acc.offer(value, (edges, r), lambda e=edges, r=r: len(e) == n - 1 and ws[r] == n - 1)
    return acc


def verify_star_theorem(n: int, jobs: int = 1) -> VerificationReport:
    """Maximize ``C1`` over all connected graphs on ``n`` labelled nodes and
    compare with the star's centre."""
    if n < 2:
        raise InvalidSize("need at least 2 nodes")
    if n > MAX_STAR_NODES:
        raise SizeLimitExceeded(f"star verification is limited to n <= {MAX_STAR_NODES}")
    start = time.perf_counter()
    acc = _run_sharded(_scan_all_graphs, (n,), jobs)
    return VerificationReport(
        label=f"star {n}",
        instances=acc.instances,
        best_value=acc.best,
        best_instance=acc.best_instance,
        target=star_centralization(n),
        maximizers=acc.maximizers,
        maximizers_isomorphic=acc.all_iso,
        elapsed=time.perf_counter() - start,
    )


# -- eigenvector exploration -----------------------------------------------------

@dataclass(frozen=True)
class EigenvectorScan:
    """Exploratory comparison of eigenvector centralization against ``H``.

    Values use eigenvector centrality scaled to sum 1, so the centralization
    analogue of node ``v`` is ``n * x_v - 1``.
    """

    label: str
    normalization: str
    instances: int
    extremal_value: float
    best_value: float
    best_instance: tuple
    extremal_attains_max: bool
    counterexamples: list[tuple]

    def as_dict(self) -> dict:
        edges, root = self.best_instance
        return {
            "scan": self.label,
            "normalization": self.normalization,
            "instances": self.instances,
            "H_value": round(self.extremal_value, 12),
            "best_value": round(self.best_value, 12),
            "best_root": root,
            "best_edges": [f"{a}-{b}" for a, b in edges],
            "H_attains_max": self.extremal_attains_max,
            "counterexamples": [{"root": r, "edges": [f"{a}-{b}" for a, b in es]} for es, r in self.counterexamples],
        }


def _eigen_a0_best(g: BipartiteGraph, tol: float) -> tuple[float, int]:
    x = eigenvector_centrality(g, tol)
    a0 = g.nodes_in(A0)
    v = max(a0, key=lambda i: (x[i], -i))
    return g.n * float(x[v]) - 1.0, v


def eigenvector_conjecture_scan(spec: EnumerationSpec, tol: float = 1e-12,
                                slack: float = 1e-9, max_dump: int = 20) -> EigenvectorScan:
    """Compare ``H``'s root against every enumerated graph under the
    eigenvector analogue of closeness centralization. Informational only:
    the comparison has no pass/fail meaning."""
    h, hroot = build_extremal_tree(spec.n0, spec.n1)
    x = eigenvector_centrality(h, tol)
    h_value = h.n * float(x[hroot]) - 1.0
    gen = enumerate_bipartite_trees if spec.mode == "trees" else enumerate_connected_bipartite_graphs
    count, best, best_inst, dump = 0, None, None, []
    for g in gen(spec.n0, spec.n1):
        count += 1
        value, v = _eigen_a0_best(g, tol)
        inst = (tuple(g.edges()), v)
        if best is None or value > best + slack or (abs(value - best) <= slack and inst < best_inst):
            best, best_inst = value, inst
        if value > h_value + slack and len(dump) < max_dump:
            dump.append(inst)
    return EigenvectorScan(
        label=f"{spec.mode} {spec.n0} {spec.n1}",
        normalization="sum",
        instances=count,
        extremal_value=h_value,
        best_value=best,
        best_instance=best_inst,
        extremal_attains_max=best <= h_value + slack,
        counterexamples=dump,
    )
