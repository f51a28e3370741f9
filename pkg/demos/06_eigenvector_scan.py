"""
Does H also win under eigenvector centrality?
=============================================

An open question: replace closeness by eigenvector centrality and ask
whether ``H`` still maximizes the centralization of a first-part node.
This scan only reports what it sees. It is not a proof either way.
"""

import numpy as np

from twomode import EnumerationSpec, build_extremal_tree, eigenvector_centrality, eigenvector_conjecture_scan

# %%
# Eigenvector centrality by power iteration, scaled to sum to one.
h, root = build_extremal_tree(4, 2)
x = eigenvector_centrality(h)
print(np.round(x, 4), "root share", round(float(x[root]), 4))

# %%
# Compare H with every tree, and every connected graph, at a few sizes.
for n0, n1, mode in [(3, 2, "trees"), (4, 3, "trees"), (5, 3, "trees"), (3, 3, "graphs")]:
    scan = eigenvector_conjecture_scan(EnumerationSpec(n0, n1, mode))
    print(f"{mode} {n0},{n1}: {scan.instances} instances, H {scan.extremal_value:.6f},"
          f" best {scan.best_value:.6f}, H attains max: {scan.extremal_attains_max},"
          f" {len(scan.counterexamples)} beat H")
