"""
The distance matrix of a small graph
====================================

Build the hop-distance matrix of the 5-cycle and read graph invariants
straight off it.
"""

from hadwiger_lab.chromatic import chromatic_number, find_separators, minimal_partite_representation
from hadwiger_lab.graph import Graph, cycle
from hadwiger_lab.transparency import (
    clique_number,
    compute,
    degree_of,
    independence_number,
    threshold_to_adjacency,
)

# label the cycle 1..5 so rows read v1..v5
g = cycle(5).relabel(lambda v: v + 1)
t = compute(g)
print(t.to_text())

# entries equal to 1 are exactly the edges; zeroing everything else gives A(G)
print("adjacency:", threshold_to_adjacency(t))
print("degrees:", {v: degree_of(t, v) for v in g.vertices})

# all-ones principal submatrices are cliques, all->=2 ones are independent sets
print("clique number:", clique_number(t))
print("independence number:", independence_number(t))

rep = minimal_partite_representation(g)
print("chromatic number:", chromatic_number(g), "classes:", rep.to_lists())
for s in find_separators(g, rep):
    print(f"  {s.first} and {s.second} sit at distance 2 through {s.witness}")

# two components: cross entries are the unreachable sentinel
print(compute(Graph(range(4), [(0, 1), (2, 3)])).to_text())
