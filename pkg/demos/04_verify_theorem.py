"""
Checking the extremal result exhaustively
=========================================

For small part sizes every labelled bipartite tree (and every connected
bipartite graph) can be listed. The best node of the first part never beats
the closed form, and every tree attaining it is a copy of ``H``.
"""

from twomode import EnumerationSpec, verify_bipartite_theorem, verify_star_theorem
from twomode.enumeration import scoins_count

# %%
# Trees are generated from Prüfer-style codes, one per tree. Their number
# is ``n0^(n1-1) * n1^(n0-1)``.
for n0, n1 in [(3, 2), (4, 3), (5, 4)]:
    rep = verify_bipartite_theorem(EnumerationSpec(n0, n1, "trees"))
    print(f"trees {n0},{n1}: {rep.instances} (formula {scoins_count(n0, n1)}), best {rep.best_value},"
          f" closed form {rep.target}, {rep.maximizers} maximizers, all isomorphic to H: {rep.maximizers_isomorphic}")

# %%
# Graphs with cycles never do better, since a breadth-first tree from the
# root keeps its distances and lengthens everyone else's.
for n0, n1 in [(2, 3), (3, 3), (3, 4)]:
    rep = verify_bipartite_theorem(EnumerationSpec(n0, n1, "graphs", jobs=2))
    print(f"graphs {n0},{n1}: {rep.instances} graphs, verdict {rep.verdict}")

# %%
# Without the two-mode restriction the star is best: its centre scores
# ``1 - (n-1)/(2n-3)``.
for n in range(2, 7):
    rep = verify_star_theorem(n)
    print(f"n={n}: {rep.instances} connected graphs, best {rep.best_value}, verdict {rep.verdict}")
