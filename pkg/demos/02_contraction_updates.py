"""
Updating distances under a contraction
======================================

Contract one edge and compare three routes to the new matrix: full
recomputation, the exact incremental update and the rule-by-rule update
with its one-sided path test.
"""

import io

from hadwiger_lab.contraction import (
    divergence_census,
    mismatch_positions,
    replacement_count,
    update_exact,
    update_paper_literal,
    uses_edge_condition,
)
from hadwiger_lab.graph import Graph, all_labeled_connected, contract_edge, cycle
from hadwiger_lab.transparency import compute

g = cycle(5).relabel(lambda v: v + 1)
t = compute(g)
exact = update_exact(t, g, 1, 2)
print("v1 => v2 on the 5-cycle:")
print(exact.to_text())
print("recomputed agrees:", exact == compute(contract_edge(g, 1, 2)))
print("rule-by-rule agrees:", exact == update_paper_literal(t, 1, 2))

# the path 3 - 0 - 1 - 2: the shortest 2..3 path crosses edge (0, 1) as 2, 1, 0, 3,
# which only the reverse orientation of the path test sees
p = Graph(range(4), [(0, 1), (1, 2), (0, 3)])
tp = compute(p)
print("test (2,3):", uses_edge_condition(tp, 2, 3, 0, 1), " test (3,2):", uses_edge_condition(tp, 3, 2, 0, 1))
lit, ex = update_paper_literal(tp, 0, 1), update_exact(tp, p, 0, 1)
for m, n in mismatch_positions(lit, ex):
    print(f"entry ({m},{n}): rule-by-rule {lit[m, n]}, exact {ex[m, n]}")

# replacement counts drive the greedy choice
k4e = Graph([1, 2, 3, 4], [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)])
tk = compute(k4e)
for i, j in [(1, 2), (1, 3), (3, 1)]:
    print(f"replacements {i} => {j}:", replacement_count(tk, k4e, i, j))

# census over every connected labeled graph on up to 5 vertices
sink = io.StringIO()
print(divergence_census(all_labeled_connected(5), sink))
print(sink.getvalue().splitlines()[0])
