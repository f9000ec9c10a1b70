"""Sparsest input placement for structural controllability of switched systems.

``dedicated_placement`` finds the smallest set ``J`` of states that, each
driven by its own input in a single mode, makes the switched system
structurally controllable. The remaining functions derive the other optimal
input configurations from that set: shared actuators (``non_dedicated_b``,
``minimal_b``) and actuators spread over several modes (``distribute``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .graphs import build_state_digraph, scc_decompose
from .matching import SColumn, build_placement_bipartite, min_weight_max_matching
from .patterns import Pattern, SwitchedSystem

__all__ = [
    "PlacementSolution",
    "ModeInputAssignment",
    "dedicated_placement",
    "dedicated_b",
    "non_dedicated_b",
    "minimal_b",
    "distribute",
    "solution_to_dict",
]


@dataclass(frozen=True)
class PlacementSolution:
    """Index sets produced by the placement algorithm.

    Attributes
    ----------
    n, m : int
        State dimension and number of modes of the source system.
    j_prime : frozenset of int
        States matched through surrogate columns; each lies in a distinct
        non-top-linked SCC and also lifts the generic rank.
    j_dprime : frozenset of int
        States left unmatched by the minimum weight maximum matching.
    j_tprime : frozenset of int
        One state per non-top-linked SCC not yet holding a ``j_prime`` or
        ``j_dprime`` state.
    scc_cover : dict
        Non-top-linked SCC id to the actuated state inside it.
    """

    n: int
    m: int
    j_prime: frozenset[int]
    j_dprime: frozenset[int]
    j_tprime: frozenset[int]
    scc_cover: dict[int, int]

    @property
    def states(self) -> frozenset[int]:
        return self.j_prime | self.j_dprime | self.j_tprime

    @property
    def cardinality(self) -> int:
        return len(self.states)

    @property
    def matched_states(self) -> frozenset[int]:
        return self.j_prime | self.j_dprime


@dataclass(frozen=True)
class ModeInputAssignment:
    """Per-mode input patterns ``(B_1, ..., B_m)``."""

    patterns: tuple[Pattern, ...]

    @property
    def total_nonzeros(self) -> int:
        return sum(p.nnz for p in self.patterns)

    def __iter__(self):
        return iter(self.patterns)

    def __getitem__(self, k):
        return self.patterns[k]

    def __len__(self):
        return len(self.patterns)


def dedicated_placement(system: SwitchedSystem) -> PlacementSolution:
    n = system.n
    decomp = scc_decompose(build_state_digraph(system.a_union()))
    graph = build_placement_bipartite(system, decomp)
    mwmm = min_weight_max_matching(graph)

    j_prime = frozenset(
        r for left, r in mwmm.pairs if isinstance(graph.left_labels[left], SColumn)
    )
    j_dprime = frozenset(range(1, n + 1)) - mwmm.matched_rows()
    covered = j_prime | j_dprime

    j_tprime = set()
    scc_cover = {}
    for cid in decomp.non_top_linked:
        members = decomp.members(cid)
        inside = members & covered
        if inside:
            scc_cover[cid] = min(inside)
        else:
            rep = min(members)
            j_tprime.add(rep)
            scc_cover[cid] = rep
    return PlacementSolution(
        n=n,
        m=system.m,
        j_prime=j_prime,
        j_dprime=j_dprime,
        j_tprime=frozenset(j_tprime),
        scc_cover=scc_cover,
    )


def dedicated_b(sol: PlacementSolution, n: int | None = None) -> ModeInputAssignment:
    """One dedicated input per state of ``J``, all in the first mode."""
    n = sol.n if n is None else n
    if not sol.states:
        raise ValueError("empty placement; a nonempty system always needs an input")
    first = Pattern.diagonal(n, sol.states)
    return ModeInputAssignment((first,) + tuple(Pattern.zeros(n) for _ in range(sol.m - 1)))


def non_dedicated_b(sol: PlacementSolution, column_choice: Mapping[int, int]) -> Pattern:
    """Diagonal on the matched states plus one chosen entry per ``j_tprime`` row."""
    n = sol.n
    missing = sol.j_tprime - set(column_choice)
    extra = set(column_choice) - sol.j_tprime
    if missing:
        raise ValueError(f"no column chosen for states {sorted(missing)}")
    if extra:
        raise ValueError(f"states {sorted(extra)} are not in j_tprime")
    entries = {(i, i) for i in sol.matched_states}
    for state, col in column_choice.items():
        if not isinstance(col, int) or not 1 <= col <= n:
            raise ValueError(f"column {col!r} for state {state} outside 1..{n}")
        entries.add((state, col))
    return Pattern(n, n, tuple(entries))


def minimal_b(sol: PlacementSolution) -> Pattern:
    """Fold every ``j_tprime`` row onto the lowest matched column.

    Leaves the dedicated diagonal when there is no matched column to share.
    """
    if not sol.matched_states:
        return non_dedicated_b(sol, {s: s for s in sol.j_tprime})
    target = min(sol.matched_states)
    return non_dedicated_b(sol, {s: target for s in sol.j_tprime})


def _partition_pairs(partition) -> list[tuple[int, int]]:
    if isinstance(partition, Mapping):
        return list(partition.items())
    return [tuple(p) for p in partition]


def distribute(
    sol: PlacementSolution,
    base: Pattern,
    partition: Mapping[int, int] | Iterable[tuple[int, int]],
) -> ModeInputAssignment:
    """Spread the nonzero columns of ``base`` over the modes.

    ``partition`` maps each nonzero column of ``base`` to a 1-based mode; a
    column keeps its position and appears in exactly one mode.
    """
    pairs = _partition_pairs(partition)
    nonzero_cols = base.columns()
    owner: dict[int, int] = {}
    for col, mode in pairs:
        if col in owner:
            raise ValueError(f"column {col} assigned more than once")
        if col not in nonzero_cols:
            raise ValueError(f"column {col} is not a nonzero column of the base pattern")
        if not 1 <= mode <= sol.m:
            raise ValueError(f"mode {mode} outside 1..{sol.m}")
        owner[col] = mode
    unassigned = set(nonzero_cols) - set(owner)
    if unassigned:
        raise ValueError(f"columns {sorted(unassigned)} not assigned to any mode")
    per_mode: list[list[tuple[int, int]]] = [[] for _ in range(sol.m)]
    for col, rows in nonzero_cols.items():
        per_mode[owner[col] - 1].extend((r, col) for r in rows)
    return ModeInputAssignment(tuple(Pattern(base.rows, base.cols, tuple(e)) for e in per_mode))


def solution_to_dict(sol: PlacementSolution, inputs: ModeInputAssignment) -> dict:
    """JSON-ready form: sorted index lists plus per-mode input entries."""
    return {
        "j_prime": sorted(sol.j_prime),
        "j_dprime": sorted(sol.j_dprime),
        "j_tprime": sorted(sol.j_tprime),
        "cardinality": sol.cardinality,
        "modes": [{"B": [list(e) for e in b.nonzeros]} for b in inputs],
    }
