"""
Switching versus the merged single-mode system
==============================================

Collapsing all modes into one LTI system with the union pattern keeps the
digraph but loses columns: the three modes each contribute their own column
to the matching, whereas the merged matrix has column 2 only once.
"""

from structswitch import SwitchedSystem, dedicated_placement, generic_rank, concat
from structswitch.patterns import Pattern

modes = (
    Pattern(4, 4, ((1, 2),)),
    Pattern(4, 4, ((3, 2),)),
    Pattern(4, 4, ((4, 4),)),
)
switched = SwitchedSystem(4, modes)
merged = SwitchedSystem(4, (switched.a_union(),))

print("generic rank of [A1, A2, A3]:", generic_rank(concat(modes)))
print("generic rank of A1 | A2 | A3:", generic_rank(merged.a_modes[0]))

for name, system in [("switched", switched), ("merged", merged)]:
    sol = dedicated_placement(system)
    print(f"{name:>8}: J'={sorted(sol.j_prime)} J''={sorted(sol.j_dprime)} "
          f"J'''={sorted(sol.j_tprime)} -> {sol.cardinality} inputs")
