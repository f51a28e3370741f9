"""
Closeness on a toy two-mode network
===================================

Three students and four classes. Closeness ``C(v)`` is one over the total
hop distance ``W(v)``; centralization ``C1(v)`` sums ``C(v) - C(u)`` over
every node ``u`` of the network, so it is comparable across graphs.
"""

from twomode import analyze, centrality_report, fixture_path, load_fixture

# %%
# The fixture is a plain edge list, one ``student class`` pair per line.
edges = load_fixture("figure1")
print(edges.format())

# %%
# Values are exact fractions. Decimals only appear when a table is rendered.
g = edges.to_bipartite()
rep = centrality_report(g)
for v in range(g.n):
    print(f"{rep.labels[v]:>3}  W={rep.W[v]:<3} C={str(rep.C[v]):<5} C1={rep.C1[v]}")

# %%
# The centralization values of a graph always sum to zero.
print("sum of C1:", sum(rep.C1))

# %%
# The same numbers as a table, one side of the network at a time.
print(analyze(fixture_path("figure1"), "left", precision=4).text)
print(analyze(fixture_path("figure1"), "right", precision=4).text)

# %%
# The most central node overall is the class ``L2``, which every student
# attends. It also has the smallest total distance.
print("argmax in right part:", [rep.labels[v] for v in rep.part_argmax(1)[0]])
