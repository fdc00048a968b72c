"""
Greedy contraction against the exact Hadwiger number
====================================================

The greedy procedure always ends in a complete graph, and its merged
vertex groups form a genuine minor model. The exhaustive search gives the
true largest complete minor, so the two can be compared graph by graph.
"""

from hadwiger_lab.chromatic import chromatic_number
from hadwiger_lab.graph import complete_minus_edge, cycle, parse_graph6, petersen
from hadwiger_lab.minors import greedy_contract, hadwiger_number, verify_certificate

for name, g in [("C5", cycle(5)), ("K4-e", complete_minus_edge(4).relabel(lambda v: v + 1))]:
    trace = greedy_contract(g)
    steps = ", ".join(f"{s.removed}=>{s.survivor} (+{s.replacements})" for s in trace.steps)
    print(f"{name}: {steps} -> K{trace.terminal_order}")
    print("  branch sets:", [sorted(b) for b in trace.branch_sets], verify_certificate(g, trace.certificate()))

g = petersen()
h, cert = hadwiger_number(g, max_order=10)
print("Petersen: chi =", chromatic_number(g), " h =", h, " model:", cert.to_lists())
print("Petersen greedy ends at K%d" % greedy_contract(g).terminal_order)

# a 6-vertex graph where the greedy stops short of the chromatic number
g = parse_graph6("Etv_")
trace = greedy_contract(g)
print("Etv_: chi =", chromatic_number(g), " greedy K%d" % trace.terminal_order, " h =", hadwiger_number(g)[0])
