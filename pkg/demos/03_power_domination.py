"""
Power domination and its forcing view
=====================================

A seed set monitors its closed neighborhood, then monitoring spreads like
forcing. A seed set power dominates exactly when its closed neighborhood is a
forcing set; the loop below checks that on every seed of the Petersen graph.
"""

from itertools import combinations

from forcing_lab import closed_neighborhood, is_forcing_set, is_power_dominating_set
from forcing_lab import power_domination_closure, power_domination_number
from forcing_lab.families import cycle_graph, petersen_graph

t = power_domination_closure(cycle_graph(9), {0})
for i, level in enumerate(t.levels):
    print(f"level {i}: {sorted(level)}")

pet = petersen_graph()
r = power_domination_number(pet)
print(f"gamma_P(Petersen) = {r.value}, witness {sorted(r.witness)}")

agree = 0
for k in range(1, pet.n + 1):
    for s in combinations(range(pet.n), k):
        agree += is_power_dominating_set(pet, s) == is_forcing_set(pet, closed_neighborhood(pet, s))
print(f"neighborhood relation agrees on {agree} of {2 ** pet.n - 1} seeds")
