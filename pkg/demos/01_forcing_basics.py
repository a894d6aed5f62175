"""
Zero forcing on small graphs
============================

Color a seed set, then repeatedly let a colored vertex with exactly one
uncolored neighbor color that neighbor. Here we watch the process on a path
and a cycle, and find minimum (connected) forcing sets.
"""

from forcing_lab import connected_forcing_number, forcing_closure, forcing_number
from forcing_lab.families import cycle_graph, path_graph, star_graph

# a leaf of a path colors the whole path, one vertex per round
p6 = path_graph(6)
print(forcing_closure(p6, {0}).to_text())

# on a cycle a single vertex stalls, two adjacent vertices finish in parallel
c7 = cycle_graph(7)
print("C7 from {0}:", sorted(forcing_closure(c7, {0}).closure))
print(forcing_closure(c7, {0, 1}).to_text())

# stars: the center alone is stuck, all but one leaf is needed
k15 = star_graph(6)
r = forcing_number(k15)
print(f"F(K_1,5) = {r.value}, witness {sorted(r.witness)}")
rc = connected_forcing_number(k15)
print(f"F_c(K_1,5) = {rc.value}, witness {sorted(rc.witness)}")
