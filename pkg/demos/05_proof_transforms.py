"""
Rewrites that only increase centralization
==========================================

Any bipartite graph can be pushed towards ``H`` by three rewrites at a root
``u``: take a breadth-first tree, lift deep subtrees up to the root
(flattening), then move leaves from crowded spokes to sparse ones. Each step
is audited by recomputing every total distance.
"""

from twomode import build_bipartite, centralization, closed_form_centralization
from twomode.graph import part_max_centralization
from twomode.transforms import (
    apply_flatten,
    audit_rewire,
    audit_transform,
    balance_fixpoint,
    bfs_spanning_tree,
    build_flatten_context,
)

# %%
# A graph with a cycle and a long tail.
g = build_bipartite(5, 4, [(0, 0), (0, 1), (1, 0), (1, 1), (1, 2), (2, 2), (3, 2), (3, 3), (4, 3)])
u = part_max_centralization(g, 0)[0][0]
print("root", u, "start", centralization(g, u))

# %%
# Step 1: breadth-first tree. The root's distances do not change.
t = bfs_spanning_tree(g, u)
print("bfs tree", centralization(t, u))

# %%
# Step 2: flatten until everything is within two hops. The audit lists the
# per-node identities that explain the gain.
while (ctx := build_flatten_context(t, u)) is not None:
    after = apply_flatten(t, u, ctx)
    audit = audit_transform(t, after, ctx)
    print(f"flatten case {ctx.case}: z={ctx.z} w={ctx.w} Y={sorted(ctx.Y)} ->", audit.clauses)
    print("   C1", audit.c1_before, "->", audit.c1_after)
    t = after

# %%
# Step 3: balance the spokes. A single move is audited first.
deg = t.graph.degree
spokes = sorted(t.graph.adjacency[u], key=deg)
if deg(spokes[-1]) >= deg(spokes[0]) + 2:
    print("one rewire:", audit_rewire(t, u, spokes[-1], spokes[0]))
out, moves = balance_fixpoint(t, u)
print(f"after {moves} moves:", centralization(out, u), "closed form:", closed_form_centralization(5, 4))
