"""Tree rewrites that never decrease the root's closeness centralization.

Three rewrites are provided, each on a tree ``G`` seen rooted at ``u``:

* :func:`~twomode.graph.bfs_spanning_tree` (re-exported) collapses a cyclic
  graph to a breadth-first tree without changing ``W(u)``;
* :func:`rewire_balance` moves one leaf from a heavy neighbour ``w1`` of the
  root to a light neighbour ``w2``;
* :func:`apply_flatten` lifts the depth-3 nodes below the largest deep child
  ``z`` of the root up to the root, detaching the intermediate nodes ``P``
  and, when one child ``w`` holds at least half the tree, shifting a set
  ``S`` of its leaves onto ``z``.

:func:`audit_rewire` and :func:`audit_transform` recompute every total
distance by BFS and check the per-node identities and inequalities that
explain why ``C1(u)`` goes up.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    ContextMismatch,
    DegreeGapTooSmall,
    NotATree,
    RootDegreeOne,
    RootNotAdjacentToAllA1,
)
from .extremal import lower_bound
from .graph import (
    BipartiteGraph,
    bfs_spanning_tree,
    centralization_from_w,
    is_tree,
    total_distances,
)

__all__ = [
    "bfs_spanning_tree",
    "rewire_balance",
    "audit_rewire",
    "balance_fixpoint",
    "TransformContext",
    "build_flatten_context",
    "apply_flatten",
    "FlattenAudit",
    "audit_transform",
]

PASS, FAIL, VACUOUS, UNMET = "pass", "fail", "vacuous", "precondition unmet"


def _rooted(tree: BipartiteGraph, u: int):
    """Parent and depth arrays plus child lists of ``tree`` rooted at ``u``."""
    adj = tree.graph.adjacency
    n = tree.n
    parent = [-1] * n
    depth = [-1] * n
    depth[u] = 0
    order = [u]
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if depth[y] < 0:
                depth[y] = depth[x] + 1
                parent[y] = x
                order.append(y)
                queue.append(y)
    children = [[] for _ in range(n)]
    for v in order[1:]:
        children[parent[v]].append(v)
    return parent, depth, children


def _subtree(children, x) -> set[int]:
    out, stack = set(), [x]
    while stack:
        v = stack.pop()
        out.add(v)
        stack.extend(children[v])
    return out


def _require_tree(tree: BipartiteGraph) -> None:
    if not is_tree(tree):
        raise NotATree("input graph is not a tree")


# -- balancing the root's neighbours -------------------------------------------

def _check_rewire(tree: BipartiteGraph, u: int, w1: int, w2: int) -> None:
    _require_tree(tree)
    other = [v for v in range(tree.n) if tree.part[v] != tree.part[u]]
    if set(tree.graph.adjacency[u]) != set(other):
        raise RootNotAdjacentToAllA1(f"root {u} is not adjacent to the whole opposite part")
    for w in (w1, w2):
        if w not in tree.graph.adjacency[u]:
            raise RootNotAdjacentToAllA1(f"node {w} is not a neighbour of the root")
    if tree.graph.degree(w1) < tree.graph.degree(w2) + 2:
        raise DegreeGapTooSmall(
            f"deg({w1})={tree.graph.degree(w1)} < deg({w2})+2={tree.graph.degree(w2) + 2}")


def _moved_child(tree: BipartiteGraph, u: int, w1: int) -> int:
    return min(x for x in tree.graph.adjacency[w1] if x != u)


def rewire_balance(tree: BipartiteGraph, u: int, w1: int, w2: int) -> BipartiteGraph:
    """Re-attach the lowest-numbered child of ``w1`` to ``w2``.

    Requires a tree whose root ``u`` is adjacent to the whole opposite part,
    and ``deg(w1) >= deg(w2) + 2``.
    """
    _check_rewire(tree, u, w1, w2)
    z = _moved_child(tree, u, w1)
    edges = [e for e in tree.edges() if e != tuple(sorted((w1, z)))]
    edges.append((w2, z))
    return tree.with_edges(edges)


@dataclass(frozen=True)
class RewireAudit:
    z: int
    items: dict[str, bool]
    c1_before: Fraction
    c1_after: Fraction

    @property
    def increased(self) -> bool:
        return self.c1_after > self.c1_before

    @property
    def ok(self) -> bool:
        return self.increased and all(self.items.values())


def audit_rewire(tree: BipartiteGraph, u: int, w1: int, w2: int) -> RewireAudit:
    """Check the six distance identities of one :func:`rewire_balance` step.

    With ``N(w1) = {u, z, x_1..x_t}`` and ``N(w2) = {u, y_1..y_s}``:
    each ``x_i`` gains 2, each ``y_j`` loses 2, ``W(y_j) - W(x_i) = 2(t-s+1)``,
    ``z`` gains ``2(t-s)``, ``w1`` gains 2 and ``w2`` loses 2.
    """
    after = rewire_balance(tree, u, w1, w2)
    z = _moved_child(tree, u, w1)
    w, w_ = total_distances(tree), total_distances(after)
    xs = [x for x in tree.graph.adjacency[w1] if x not in (u, z)]
    ys = [y for y in tree.graph.adjacency[w2] if y != u]
    t, s = len(xs), len(ys)
    items = {
        "x_gain_2": all(w_[x] == w[x] + 2 for x in xs),
        "y_lose_2": all(w_[y] == w[y] - 2 for y in ys),
        "y_minus_x": all(w[y] == w[x] + 2 * (t - s + 1) for x in xs for y in ys),
        "z_gain": w_[z] == w[z] + 2 * (t - s),
        "w1_gain_2": w_[w1] == w[w1] + 2,
        "w2_lose_2": w_[w2] == w[w2] - 2,
    }
    return RewireAudit(z, items, centralization_from_w(w, u), centralization_from_w(w_, u))


def balance_fixpoint(tree: BipartiteGraph, u: int) -> tuple[BipartiteGraph, int]:
    """Apply :func:`rewire_balance` until the root's neighbours have degrees
    within one of each other. Returns the final tree and the step count."""
    steps = 0
    while True:
        nbrs = tree.graph.adjacency[u]
        deg = tree.graph.degree
        w1 = min(nbrs, key=lambda x: (-deg(x), x))
        w2 = min(nbrs, key=lambda x: (deg(x), x))
        if deg(w1) < deg(w2) + 2:
            return tree, steps
        tree = rewire_balance(tree, u, w1, w2)
        steps += 1


# -- flattening ----------------------------------------------------------------

@dataclass(frozen=True)
class TransformContext:
    """Node sets driving one flattening step on a tree rooted at ``u``.

    ``z`` is the largest child of ``u`` whose subtree reaches depth 2 below
    it, ``ys`` are the nodes two levels under ``z`` and ``Y`` their subtrees.
    ``P``/``Pprime`` split the children of ``z`` into internal nodes and
    leaves. ``w`` is the donor child, ``S`` the leaves of ``w`` moved onto
    ``z`` (empty unless ``T_w`` covers at least half the tree) and
    ``Sprime`` the rest of ``T_w`` below ``w``. ``R`` is everything outside
    ``T_z`` and ``T_w``, including ``u``.
    """

    u: int
    z: int
    w: int
    ys: tuple[int, ...]
    Y: frozenset[int]
    P: frozenset[int]
    Pprime: frozenset[int]
    S: frozenset[int]
    Sprime: frozenset[int]
    R: frozenset[int]
    n: int
    case: str = field(default="d")

    @property
    def t(self) -> int:
        return len(self.ys)

    @property
    def k(self) -> int:
        return len(self.Pprime)

    def kept_children(self, tree: BipartiteGraph) -> dict[int, int]:
        """For each ``p`` in ``P``, the child it stays attached to."""
        _, _, children = _rooted(tree, self.u)
        return {p: min(children[p]) for p in self.P}


def build_flatten_context(tree: BipartiteGraph, u: int) -> TransformContext | None:
    """Choose ``z``, ``w`` and the node sets for flattening ``tree`` at ``u``.

    Returns ``None`` when every node is within distance 2 of ``u``. Ties are
    broken towards the lowest node id; ``S`` is the lowest-numbered nodes of
    ``T_w`` other than ``w``.
    """
    _require_tree(tree)
    if tree.graph.degree(u) < 2:
        raise RootDegreeOne(f"root {u} has degree {tree.graph.degree(u)}; need at least 2")
    _, depth, children = _rooted(tree, u)
    if max(depth) <= 2:
        return None
    n = tree.n
    sub = {c: _subtree(children, c) for c in children[u]}
    deep = [c for c in children[u] if any(depth[x] >= 3 for x in sub[c])]
    z = min(deep, key=lambda c: (-len(sub[c]), c))
    ys = tuple(sorted(x for x in sub[z] if depth[x] == 3))
    Y = set().union(*(_subtree(children, y) for y in ys))
    P = {p for p in children[z] if children[p]}
    Pprime = {p for p in children[z] if not children[p]}

    others = [c for c in children[u] if c != z]
    heavy = [c for c in others if 2 * len(sub[c]) >= n]
    if heavy:
        w = heavy[0]
        below = sorted(sub[w] - {w})
        S = set(below[:len(sub[w]) - n // 2])
        case = "c"
    else:
        w = min(others, key=lambda c: (-len(sub[c]), c))
        S = set()
        case = "d"
    Sprime = sub[w] - S - {w}
    R = set(range(n)) - sub[z] - sub[w]
    return TransformContext(
        u=u, z=z, w=w, ys=ys, Y=frozenset(Y), P=frozenset(P), Pprime=frozenset(Pprime),
        S=frozenset(S), Sprime=frozenset(Sprime), R=frozenset(R), n=n, case=case)


def apply_flatten(tree: BipartiteGraph, u: int, ctx: TransformContext) -> BipartiteGraph:
    """Rewrite ``tree`` according to ``ctx``.

    (a) join ``u`` to every ``y_i``; (b) detach each ``p`` in ``P`` from ``z``
    and from all its children but the lowest-numbered one; (c) move each
    ``s`` in ``S`` from ``w`` to ``z``.
    """
    if ctx.u != u or build_flatten_context(tree, u) != ctx:
        raise ContextMismatch("context was not built from this tree and root")
    edges = {tuple(sorted(e)) for e in tree.edges()}
    for y in ctx.ys:
        edges.add(tuple(sorted((u, y))))
    _, _, children = _rooted(tree, u)
    for p in ctx.P:
        edges.discard(tuple(sorted((ctx.z, p))))
        keep = min(children[p])
        for c in children[p]:
            if c != keep:
                edges.discard(tuple(sorted((p, c))))
    for s in ctx.S:
        edges.discard(tuple(sorted((s, ctx.w))))
        edges.add(tuple(sorted((s, ctx.z))))
    return tree.with_edges(sorted(edges))


@dataclass(frozen=True)
class FlattenAudit:
    """Outcome of :func:`audit_transform`.

    ``clauses`` maps each check to ``"pass"``, ``"fail"``, ``"vacuous"`` (no
    node to check) or ``"precondition unmet"``.
    """

    clauses: dict[str, str]
    W: tuple[int, ...]
    W_after: tuple[int, ...]
    c1_before: Fraction
    c1_after: Fraction
    n1: int
    gain_bound_precondition: bool
    root_dominates_P: bool

    @property
    def increased(self) -> bool:
        return self.c1_after > self.c1_before

    @property
    def failures(self) -> list[str]:
        return [k for k, v in self.clauses.items() if v == FAIL]

    def as_dict(self) -> dict:
        return {
            "clauses": dict(self.clauses),
            "c1_before": str(self.c1_before),
            "c1_after": str(self.c1_after),
            "increased": self.increased,
            "n1": self.n1,
            "gain_bound_precondition": self.gain_bound_precondition,
            "root_dominates_P": self.root_dominates_P,
        }


def _verdict(ok: bool, nodes) -> str:
    if not nodes:
        return VACUOUS
    return PASS if ok else FAIL


def audit_transform(g: BipartiteGraph, g_after: BipartiteGraph, ctx: TransformContext) -> FlattenAudit:
    """Compare total distances before and after one flattening step.

    Clauses, with ``W``/``W'`` the totals before/after:

    * ``i``: on ``R``, ``W - W' = 2|Y|``;
    * ``ii``: on ``{z} | P'``, ``W' >= W - 2|S|``;
    * ``iii``: on ``{w} | S'``, ``W' = W + 2|S| - 2|Y|``;
    * ``iv``: on ``P | S``, ``W' >= W``;
    * ``v``: if ``S`` is nonempty, every node of ``P'`` has larger ``W`` and
      larger ``W'`` than every node of ``S'``;
    * ``vi``: on ``Y``, ``W' <= W``;
    * ``vii``: on ``Y | R | S' | {w}``, ``W' >= W'(u)``. This one relies on
      each ``T_p`` (``p`` in ``P``) holding at most half the nodes, which
      follows from ``W(p) >= W(u)``; when that fails the clause reports
      ``"precondition unmet"``;
    * ``gain_bound``: for ``x`` in ``Y``, ``0 <= (W - W')/W < 2 C1(u; g)``,
      checked only when the opposite part has at least 3 nodes and
      ``C1(u; g)`` reaches the extremal lower bound.
    """
    u = ctx.u
    if apply_flatten(g, u, ctx) != g_after:
        raise ContextMismatch("g_after is not the flattening of g under ctx")
    W, W_ = total_distances(g), total_distances(g_after)
    Y, S, Sp, R, P, Pp = ctx.Y, ctx.S, ctx.Sprime, ctx.R, ctx.P, ctx.Pprime
    zP = Pp | {ctx.z}
    wS = Sp | {ctx.w}
    c: dict[str, str] = {}
    c["i"] = _verdict(all(W[x] - W_[x] == 2 * len(Y) for x in R), R)
    c["ii"] = _verdict(all(W_[x] >= W[x] - 2 * len(S) for x in zP), zP)
    c["iii"] = _verdict(all(W_[x] == W[x] + 2 * len(S) - 2 * len(Y) for x in wS), wS)
    c["iv"] = _verdict(all(W_[x] >= W[x] for x in P | S), P | S)
    if S:
        pairs = [(a, b) for a in Pp for b in Sp]
        c["v"] = _verdict(all(W[a] > W[b] and W_[a] > W_[b] for a, b in pairs), pairs)
    else:
        c["v"] = VACUOUS
    c["vi"] = _verdict(all(W_[x] <= W[x] for x in Y), Y)
    dominates = all(W[p] >= W[u] for p in P)
    target = Y | R | Sp | {ctx.w}
    if dominates:
        c["vii"] = _verdict(all(W_[x] >= W_[u] for x in target), target)
    else:
        c["vii"] = UNMET

    n1 = sum(1 for p in g.part if p != g.part[u])
    c1 = centralization_from_w(W, u)
    pre3 = n1 >= 3 and c1 >= lower_bound(n1)
    if pre3:
        c["gain_bound"] = _verdict(all(0 <= Fraction(W[x] - W_[x], W[x]) < 2 * c1 for x in Y), Y)
    else:
        c["gain_bound"] = UNMET
    return FlattenAudit(c, W, W_, c1, centralization_from_w(W_, u), n1, pre3, dominates)
