"""Random instances for experiments and tests."""

from __future__ import annotations

import numpy as np

from .patterns import Pattern, SwitchedSystem

__all__ = ["random_pattern", "random_system", "random_setcover"]


def random_pattern(rows, cols, density, rng) -> Pattern:
    mask = rng.random((rows, cols)) < density
    return Pattern.from_array(mask)


def random_system(n, m, density, rng=None) -> SwitchedSystem:
    """``m`` independent Bernoulli(``density``) ``n x n`` dynamics patterns, no inputs."""
    rng = np.random.default_rng(rng)
    return SwitchedSystem(n, tuple(random_pattern(n, n, density, rng) for _ in range(m)))


def random_setcover(universe_size, n_subsets, rng=None) -> list[frozenset[int]]:
    """Random subsets of ``1..universe_size`` whose union is the whole universe."""
    rng = np.random.default_rng(rng)
    elements = np.arange(1, universe_size + 1)
    subsets = [set(elements[rng.random(universe_size) < 0.4].tolist()) for _ in range(n_subsets)]
    for e in elements.tolist():
        if not any(e in s for s in subsets):
            subsets[int(rng.integers(n_subsets))].add(e)
    return [frozenset(s) for s in subsets]
