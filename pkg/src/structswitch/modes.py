"""Smallest set of modes a switching signal must visit.

Only which modes appear matters for structural controllability, not their
order or dwell times, so the task reduces to choosing a subset of modes.
The exact search is exponential; deciding the minimum is NP-hard
(``make_setcover_instance`` builds the set-cover reduction).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .exceptions import InfeasibleError
from .graphs import accessible_set, build_state_digraph
from .matching import generic_rank
from .patterns import Pattern, SwitchedSystem, concat
from .verification import check_structural_controllability

__all__ = [
    "ModeSubsetResult",
    "restrict",
    "min_modes_exact",
    "min_modes_greedy",
    "make_setcover_instance",
]


@dataclass(frozen=True)
class ModeSubsetResult:
    modes: tuple[int, ...]
    method: str
    feasible: bool = True

    @property
    def size(self) -> int:
        return len(self.modes)

    def to_dict(self) -> dict:
        return {
            "modes": list(self.modes),
            "size": self.size,
            "method": self.method,
            "feasible": self.feasible,
        }


def restrict(system: SwitchedSystem, modes: Iterable[int]) -> SwitchedSystem:
    """Sub-system over the given 1-based modes, kept in ascending order."""
    chosen = sorted(set(modes))
    if not chosen:
        raise ValueError("need at least one mode")
    bad = [k for k in chosen if not 1 <= k <= system.m]
    if bad:
        raise ValueError(f"mode indices {bad} outside 1..{system.m}")
    a = tuple(system.a_modes[k - 1] for k in chosen)
    b = None if system.b_modes is None else tuple(system.b_modes[k - 1] for k in chosen)
    return SwitchedSystem(system.n, a, b)


def _feasible(system, modes) -> bool:
    return check_structural_controllability(restrict(system, modes)).overall


def _require_controllable(system):
    if not check_structural_controllability(system).overall:
        raise InfeasibleError("the system is not structurally controllable with all modes")


def min_modes_exact(system: SwitchedSystem) -> ModeSubsetResult:
    _require_controllable(system)
    for k in range(1, system.m + 1):
        for subset in itertools.combinations(range(1, system.m + 1), k):
            if _feasible(system, subset):
                return ModeSubsetResult(subset, "exact")
    raise AssertionError("the full mode set was verified feasible")


def _score(system: SwitchedSystem, modes: Sequence[int]) -> int:
    sub = restrict(system, modes)
    reach = accessible_set(build_state_digraph(sub.a_union()), sub.b_union())
    rank = generic_rank(concat(list(sub.a_modes) + list(sub.inputs())))
    return len(reach) + rank


def min_modes_greedy(system: SwitchedSystem) -> ModeSubsetResult:
    """Heuristic: grow from the actuated modes by best combined gain.

    The gain of a mode is the increase in accessible states plus the
    increase in matching size; ties go to the lowest index. No
    approximation guarantee.
    """
    _require_controllable(system)
    chosen = [k for k, b in enumerate(system.inputs(), start=1) if b.nnz]
    while not _feasible(system, chosen):
        current = _score(system, chosen) if chosen else 0
        best, best_gain = None, None
        for k in range(1, system.m + 1):
            if k in chosen:
                continue
            gain = _score(system, sorted(chosen + [k])) - current
            if best_gain is None or gain > best_gain:
                best, best_gain = k, gain
        chosen = sorted(chosen + [best])
    return ModeSubsetResult(tuple(chosen), "greedy")


def make_setcover_instance(universe_size: int, subsets: Sequence[Iterable[int]]) -> SwitchedSystem:
    """Switched system whose minimum mode set encodes a set-cover optimum.

    States ``x_1 .. x_{n+1}`` lie on the path ``x_1 -> x_2 -> ... -> x_{n+1}``
    where edge ``e_i`` enters ``x_{i+1}``. Every mode carries all self-loops;
    mode ``k`` also carries the path edges indexed by ``subsets[k-1]``. A
    single dedicated input drives ``x_1`` in mode 1.
    """
    n = universe_size
    sets = [frozenset(s) for s in subsets]
    if n < 1 or not sets:
        raise ValueError("need a non-empty universe and at least one subset")
    for s in sets:
        if not s <= set(range(1, n + 1)):
            raise ValueError(f"subset {sorted(s)} leaves the universe 1..{n}")
    if frozenset().union(*sets) != frozenset(range(1, n + 1)):
        raise ValueError("the subsets do not cover the universe")
    size = n + 1
    loops = [(i, i) for i in range(1, size + 1)]
    a_modes = [
        Pattern(size, size, tuple(loops + [(i + 1, i) for i in s])) for s in sets
    ]
    b_modes = [Pattern(size, size, ((1, 1),))] + [Pattern.zeros(size) for _ in sets[1:]]
    return SwitchedSystem(size, tuple(a_modes), tuple(b_modes))
