"""
How many modes does a switching signal need?
============================================

Each mode carries a subset of the edges of a path x1 -> ... -> x6, and only
x1 is actuated (in mode 1). The fewest modes restoring accessibility is a
set-cover optimum, so the exact search is exponential and the greedy
heuristic can overshoot.
"""

from structswitch import make_setcover_instance, min_modes_exact, min_modes_greedy

subsets = [{5}, {2, 4}, {1, 5}, {1, 3, 5}, {1, 5}]
system = make_setcover_instance(5, subsets)
print(f"{system.m} modes over {system.n} states")

exact = min_modes_exact(system)
greedy = min_modes_greedy(system)
print("exact: ", exact.modes, "size", exact.size)
print("greedy:", greedy.modes, "size", greedy.size)
