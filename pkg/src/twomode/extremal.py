"""The extremal tree ``H(u; n0, n1)`` and its centralization in closed form.

``H`` is the depth-2 tree rooted at ``u`` in part A0 whose root is adjacent
to every node of A1; the remaining ``m = n0 - 1`` nodes of A0 hang below the
A1 nodes as evenly as possible. Writing ``m = p*n1 + r`` with ``0 <= r < n1``,
``r`` of the A1 nodes carry ``ceil(m/n1)`` leaves and the others carry
``floor(m/n1)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidSize
from .graph import BipartiteGraph, build_bipartite


@dataclass(frozen=True)
class ExtremalParams:
    n0: int
    n1: int
    m: int
    p: int
    r: int

    @property
    def floor(self) -> int:
        return self.m // self.n1

    @property
    def ceil(self) -> int:
        return -(-self.m // self.n1)


def _check_sizes(*sizes: int) -> None:
    for s in sizes:
        if not isinstance(s, int) or s < 1:
            raise InvalidSize(f"part sizes must be positive integers, got {s!r}")


def extremal_params(n0: int, n1: int) -> ExtremalParams:
    """Euclidean split of ``n0 - 1`` by ``n1``.

    >>> extremal_params(18, 14)
    ExtremalParams(n0=18, n1=14, m=17, p=1, r=3)
    """
    _check_sizes(n0, n1)
    m = n0 - 1
    p, r = divmod(m, n1)
    return ExtremalParams(n0, n1, m, p, r)


def build_extremal_tree(n0: int, n1: int) -> tuple[BipartiteGraph, int]:
    """Canonically labelled ``H(0; n0, n1)`` and its root.

    Node ids follow :func:`~twomode.graph.build_bipartite` (A0 first). Labels
    follow the usual drawing: the root is ``"0"``, A1 nodes are ``"1"`` to
    ``str(n1)``, and the depth-2 leaves are numbered from ``n1 + 1`` on, dealt
    round-robin so that A1 node ``i`` receives leaves ``n1+i, 2*n1+i, ...``.
    """
    prm = extremal_params(n0, n1)
    edges = [(0, j) for j in range(n1)]
    edges += [(1 + k, k % n1) for k in range(prm.m)]
    labels = ["0"] + [str(n1 + 1 + k) for k in range(prm.m)] + [str(1 + j) for j in range(n1)]
    return build_bipartite(n0, n1, edges, labels), 0


@dataclass(frozen=True)
class WProfile:
    """Multiset of total distances: ``entries`` holds ``(W, multiplicity)``
    pairs sorted by ``W``; ``root`` is the root's own ``W``."""

    root: int
    entries: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return sum(k for _, k in self.entries)

    def as_counter(self) -> Counter:
        return Counter(dict(self.entries))


def closed_form_w_profile(n0: int, n1: int) -> WProfile:
    """Total distances of every node of ``H(u; n0, n1)``, by counting.

    >>> closed_form_w_profile(3, 2).entries
    ((6, 1), (7, 2), (10, 2))
    """
    prm = extremal_params(n0, n1)
    m, r = prm.m, prm.r
    hi, lo = prm.ceil, prm.floor
    root = n1 + 2 * m

    def spoke(c):
        # own c children, the root, n1-1 other spokes, m-c other leaves
        return c + 1 + 2 * (n1 - 1) + 3 * (m - c)

    def leaf(c):
        # parent, root, c-1 siblings, n1-1 other spokes, m-c other leaves
        return 1 + 2 * c + 3 * (n1 - 1) + 4 * (m - c)

    counts: Counter = Counter({root: 1})
    counts[spoke(hi)] += r
    counts[spoke(lo)] += n1 - r
    counts[leaf(hi)] += r * hi
    counts[leaf(lo)] += (n1 - r) * lo
    return WProfile(root, tuple(sorted((w, k) for w, k in counts.items() if k)))


def closed_form_centralization(n0: int, n1: int) -> Fraction:
    """``C1(u; H(u; n0, n1))`` from the W-profile.

    >>> closed_form_centralization(3, 2)
    Fraction(19, 105)
    """
    prof = closed_form_w_profile(n0, n1)
    return Fraction(n0 + n1, prof.root) - sum(Fraction(k, w) for w, k in prof.entries)


def simplified_centralization(n0: int, n1: int) -> Fraction:
    """Five-term rational expression for ``C1`` of the root, valid when
    ``r > 0``. Kept as an independent cross-check of
    :func:`closed_form_centralization`."""
    prm = extremal_params(n0, n1)
    m, r, k = prm.m, prm.r, n1
    if r == 0:
        raise InvalidSize("the simplified expression needs a nonzero remainder")
    return (Fraction(k + m, k + 2 * m)
            - Fraction(r * k, 3 * m * k - 2 * m + 2 * k * k - 3 * k + 2 * r)
            - Fraction(k * (k - r), 3 * m * k - 2 * m + 2 * k * k - k + 2 * r)
            - Fraction(r * (m + k - r), 4 * m * k - 2 * m + 3 * k * k - 4 * k + 2 * r)
            - Fraction((k - r) * (m - r), 4 * m * k - 2 * m + 3 * k * k - 2 * k + 2 * r))


def lower_bound(n1: int) -> Fraction:
    """``(n1 - 1) / (2 (2 n1 - 1))``, a lower bound on the extremal value."""
    _check_sizes(n1)
    return Fraction(n1 - 1, 2 * (2 * n1 - 1))


def asymptotic_limit(n1: int) -> Fraction:
    """Limit of the extremal value as ``n0`` grows with ``n1`` fixed."""
    _check_sizes(n1)
    return Fraction(1, 2) - Fraction(n1, 4 * n1 - 2)
