"""
Checking a placement with random realizations
=============================================

Structural controllability is generic: if one realization is controllable,
almost all are. Draw real matrices with the same zero pattern and look at the
rank of the switched controllability matrix.
"""

import numpy as np

from structswitch import (
    dedicated_b,
    dedicated_placement,
    numeric_controllable,
    realize,
    switched_ctrb_matrix,
)
from structswitch.generators import random_system
from structswitch.patterns import Pattern

system = random_system(5, 3, 0.1, rng=32)
sol = dedicated_placement(system)
good = system.with_inputs(dedicated_b(sol).patterns)
print("inputs at states", sorted(sol.states))

c = switched_ctrb_matrix(realize(good, seed=1))
print("controllability matrix shape:", c.shape)
print("singular values:", np.round(np.linalg.svd(c, compute_uv=False), 4))

hits = sum(numeric_controllable(realize(good, seed)) for seed in range(50))
print(f"controllable realizations: {hits}/50")

###############################################################################
# Remove one input: the structure is no longer controllable, and no
# realization is.
fewer = sorted(sol.states)[1:]
bad = system.with_inputs([Pattern.diagonal(5, fewer)] + [Pattern.zeros(5)] * (system.m - 1))
hits = sum(numeric_controllable(realize(bad, seed)) for seed in range(50))
print(f"with inputs {fewer}: {hits}/50 controllable")
