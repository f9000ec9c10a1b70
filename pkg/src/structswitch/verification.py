"""Checks that an input configuration renders a switched system controllable.

Two independent routes are provided. ``check_structural_controllability``
decides the structural question with graph algorithms: every non-top-linked
SCC of the union digraph must hold an actuated state, and
``[A_1, ..., A_m, B_1, ..., B_m]`` must admit a matching of size ``n``. The
numeric route draws a random real system with the same zero structure and
computes the rank of its switched controllability matrix.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .exceptions import ResourceLimitError
from .graphs import build_state_digraph, condition_i_holds, scc_decompose
from .matching import generic_rank
from .patterns import Pattern, SwitchedSystem, concat

__all__ = [
    "VerificationReport",
    "NumericSystem",
    "check_structural_controllability",
    "realize",
    "switched_ctrb_matrix",
    "numeric_controllable",
    "brute_force_min_dedicated",
    "MAX_STATES",
    "MAX_MODES",
]

MAX_STATES = 8
MAX_MODES = 4


@dataclass(frozen=True)
class VerificationReport:
    n: int
    condition_i: bool
    uncovered: tuple[frozenset[int], ...]
    condition_ii: bool
    matching_size: int

    @property
    def overall(self) -> bool:
        return self.condition_i and self.condition_ii

    def __bool__(self):
        return self.overall

    def to_dict(self) -> dict:
        return {
            "condition_i": {
                "pass": self.condition_i,
                "uncovered_sccs": [sorted(c) for c in self.uncovered],
            },
            "condition_ii": {
                "pass": self.condition_ii,
                "matching_size": self.matching_size,
                "target": self.n,
            },
            "overall": self.overall,
        }


def check_structural_controllability(system: SwitchedSystem) -> VerificationReport:
    """Structural controllability of ``system`` with its (possibly zero) inputs."""
    n = system.n
    decomp = scc_decompose(build_state_digraph(system.a_union()))
    cond_i = condition_i_holds(decomp, system.b_union())
    size = generic_rank(concat(list(system.a_modes) + list(system.inputs())))
    return VerificationReport(
        n=n,
        condition_i=cond_i.holds,
        uncovered=tuple(decomp.members(c) for c in cond_i.uncovered),
        condition_ii=size == n,
        matching_size=size,
    )


@dataclass(frozen=True)
class NumericSystem:
    a: tuple[np.ndarray, ...]
    b: tuple[np.ndarray, ...]
    seed: int | None = None

    @property
    def n(self) -> int:
        return self.a[0].shape[0]

    @property
    def m(self) -> int:
        return len(self.a)


def _fill(p: Pattern, rng, low, high) -> np.ndarray:
    out = np.zeros(p.shape)
    if p.nnz:
        idx = np.array(p.nonzeros) - 1
        out[idx[:, 0], idx[:, 1]] = rng.uniform(low, high, size=p.nnz)
    return out


def realize(system: SwitchedSystem, seed: int | None = None, value_range=(0.5, 1.5)) -> NumericSystem:
    """Random real matrices with exactly the zero structure of ``system``."""
    low, high = map(float, value_range)
    if not low < high:
        raise ValueError(f"empty range {value_range}")
    if low <= 0.0 <= high:
        raise ValueError(f"range {value_range} contains zero")
    rng = np.random.default_rng(seed)
    a = tuple(_fill(p, rng, low, high) for p in system.a_modes)
    b = tuple(_fill(p, rng, low, high) for p in system.inputs())
    return NumericSystem(a, b, seed)


def _ctrb_columns(n, m, p_total):
    return sum(m**length for length in range(n)) * p_total


def switched_ctrb_matrix(num: NumericSystem, max_states=MAX_STATES, max_modes=MAX_MODES) -> np.ndarray:
    """Columns ``A_{i_l} ... A_{i_1} B_j`` for all mode words of length ``< n``.

    Blocks are ordered by word length, then lexicographically by
    ``(i_1, ..., i_l)``, then by input mode ``j``.
    """
    n, m = num.n, num.m
    b_all = np.hstack(num.b) if num.b else np.zeros((n, 0))
    if n > max_states or m > max_modes:
        cols = _ctrb_columns(n, m, b_all.shape[1])
        raise ResourceLimitError(
            f"n={n}, m={m} exceeds the cap (n<={max_states}, m<={max_modes}); "
            f"the matrix would have {cols} columns"
        )
    level = [b_all]
    blocks = [b_all]
    for _ in range(1, n):
        # word (i_1, ..., i_l) extends (i_1, ..., i_{l-1}) on the left
        level = [a @ block for block in level for a in num.a]
        blocks.extend(level)
    return np.hstack(blocks)


def numeric_controllable(num: NumericSystem, tol: float = 1e-8, **caps) -> bool:
    """Rank test: singular values above ``tol`` times the largest must number ``n``."""
    c = switched_ctrb_matrix(num, **caps)
    if c.size == 0:
        return False
    s = np.linalg.svd(c, compute_uv=False)
    if s[0] == 0.0:
        return False
    return int(np.sum(s > tol * s[0])) == num.n


def brute_force_min_dedicated(system: SwitchedSystem) -> tuple[int, frozenset[int]]:
    """Exhaustive search for the fewest dedicated inputs, all in mode 1.

    Candidate sets are tried by increasing size and lexicographically within
    a size; the first feasible one is returned. Exponential in ``n``.
    """
    n = system.n
    bare = system.without_inputs()
    zeros = [Pattern.zeros(n) for _ in range(system.m - 1)]
    for k in range(1, n + 1):
        for subset in itertools.combinations(range(1, n + 1), k):
            trial = bare.with_inputs([Pattern.diagonal(n, subset)] + zeros)
            if check_structural_controllability(trial).overall:
                return k, frozenset(subset)
    raise AssertionError("the full dedicated set is always feasible")
