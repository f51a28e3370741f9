"""
The extremal tree and its closed form
=====================================

Among all connected bipartite graphs with parts of sizes ``n0`` and ``n1``,
a node of the first part is most central in the tree ``H(u; n0, n1)``: the
root ``u`` is joined to every node of the other part, and the remaining
``n0 - 1`` nodes hang below those as evenly as possible.
"""

from twomode import (
    asymptotic_limit,
    build_extremal_tree,
    centralization,
    closed_form_centralization,
    closed_form_w_profile,
    extremal_params,
    lower_bound,
)
from twomode.graph import total_distances

# %%
# Degrees of the second part differ by at most one.
h, root = build_extremal_tree(18, 14)
print(extremal_params(18, 14))
print("spoke degrees:", sorted((h.graph.degree(w) for w in h.nodes_in(1)), reverse=True))

# %%
# The total distances take only five values, which is what makes a closed
# form possible. BFS agrees with the counted profile.
prof = closed_form_w_profile(18, 14)
print("profile (W, count):", prof.entries)
print("BFS W of root:", total_distances(h)[root], "closed form:", prof.root)

# %%
# The two graphs of a mirrored pair have quite different values.
for n0, n1 in [(14, 18), (18, 14), (11, 28)]:
    value = closed_form_centralization(n0, n1)
    h, root = build_extremal_tree(n0, n1)
    assert value == centralization(h, root)
    print(f"H({n0},{n1}): {float(value):.5f}")

# %%
# As ``n0`` grows the value tends to ``1/2 - n1/(4 n1 - 2)``. That limit
# equals the lower bound ``(n1 - 1)/(2(2 n1 - 1))``, which holds from
# ``n1 = 3`` on. With one or two spokes the value approaches the limit
# from below.
for n1 in (1, 2, 3, 6):
    row = [float(closed_form_centralization(n0, n1)) for n0 in (n1, 10 * n1, 1000)]
    print(f"n1={n1}: limit {float(asymptotic_limit(n1)):.5f}, bound {float(lower_bound(n1)):.5f}, values",
          " ".join(f"{x:.5f}" for x in row))
