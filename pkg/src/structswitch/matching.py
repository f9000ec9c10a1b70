"""Bipartite matchings on column/row graphs of structural matrices.

Left vertices are matrix columns (addressed by their 0-based position in
``left_labels``), right vertices are matrix rows (1-based, like patterns).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, NamedTuple, Sequence

import numpy as np

from .exceptions import DimensionError
from .graphs import SccDecomposition
from .patterns import Pattern, SwitchedSystem

__all__ = [
    "AColumn",
    "SColumn",
    "WeightedBipartite",
    "Matching",
    "max_matching",
    "min_weight_max_matching",
    "generic_rank",
    "bipartite_of",
    "build_placement_bipartite",
]


class AColumn(NamedTuple):
    """Column ``column`` of the dynamics pattern of mode ``mode``."""

    mode: int
    column: int

    def __str__(self):
        return f"c{self.column}^{self.mode}"


class SColumn(NamedTuple):
    """Column of the surrogate matrix for the ``index``-th non-top-linked SCC."""

    index: int

    def __str__(self):
        return f"s{self.index}"


@dataclass(frozen=True)
class WeightedBipartite:
    left_labels: tuple[Hashable, ...]
    right_count: int
    edges: tuple[tuple[int, int], ...]
    weight: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        edges = tuple(sorted(set(self.edges)))
        if len(edges) != len(tuple(self.edges)):
            raise ValueError("duplicate edges")
        for left, right in edges:
            if not (0 <= left < len(self.left_labels) and 1 <= right <= self.right_count):
                raise ValueError(f"edge ({left}, {right}) outside the vertex sets")
        for e, w in self.weight.items():
            if e not in set(edges):
                raise ValueError(f"weight given for non-edge {e}")
            if w < 0:
                raise ValueError("weights must be non-negative")
        object.__setattr__(self, "edges", edges)

    @property
    def left_count(self) -> int:
        return len(self.left_labels)

    def w(self, edge) -> int:
        return self.weight.get(edge, 0)

    def adjacency(self) -> list[list[int]]:
        """Rows adjacent to each left vertex, ascending."""
        adj: list[list[int]] = [[] for _ in self.left_labels]
        for left, right in self.edges:
            adj[left].append(right)
        return adj


@dataclass(frozen=True)
class Matching:
    pairs: tuple[tuple[int, int], ...]
    total_weight: int = 0

    @property
    def size(self) -> int:
        return len(self.pairs)

    def matched_rows(self) -> frozenset[int]:
        return frozenset(r for _, r in self.pairs)

    def row_to_left(self) -> dict[int, int]:
        return {r: left for left, r in self.pairs}


def _kuhn(adj: Sequence[Sequence[int]], right_count: int) -> list[int]:
    """Augmenting-path maximum matching; returns the left partner of each row (-1 if none)."""
    match_right = [-1] * (right_count + 1)
    for root, nbrs in enumerate(adj):
        if not nbrs:
            continue
        # quick greedy pick before searching
        for r in nbrs:
            if match_right[r] < 0:
                match_right[r] = root
                break
        else:
            visited = [False] * (right_count + 1)
            # stack of (left vertex, next neighbour position); parents kept for unwinding
            stack = [(root, 0)]
            via: list[int] = []
            while stack:
                left, i = stack[-1]
                if i == len(adj[left]):
                    stack.pop()
                    if via:
                        via.pop()
                    continue
                stack[-1] = (left, i + 1)
                r = adj[left][i]
                if visited[r]:
                    continue
                visited[r] = True
                if match_right[r] < 0:
                    # augment along the stack
                    path_rows = via + [r]
                    for (lv, _), rv in zip(stack, path_rows):
                        match_right[rv] = lv
                    break
                via.append(r)
                stack.append((match_right[r], 0))
    return match_right


def max_matching(g: WeightedBipartite) -> Matching:
    """Maximum-cardinality matching; edge weights are ignored for the optimum."""
    match_right = _kuhn(g.adjacency(), g.right_count)
    pairs = tuple(sorted((left, r) for r, left in enumerate(match_right) if left >= 0))
    return Matching(pairs, sum(g.w(p) for p in pairs))


def _hungarian(cost: np.ndarray) -> np.ndarray:
    """Row-to-column assignment of minimum total cost for ``rows <= cols``.

    Shortest augmenting paths with potentials, rows inserted in order.
    Entries may be ``inf``; a finite assignment must exist. Ties resolve to
    the lowest column index, so the result is deterministic.
    """
    n, m = cost.shape
    inf = np.inf
    a = np.full((n + 1, m + 1), inf)
    a[1:, 1:] = cost
    u = np.zeros(n + 1)
    v = np.zeros(m + 1)
    p = np.zeros(m + 1, dtype=np.int64)
    way = np.zeros(m + 1, dtype=np.int64)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = np.full(m + 1, inf)
        used = np.zeros(m + 1, dtype=bool)
        while True:
            used[j0] = True
            i0 = p[j0]
            free = ~used
            cur = a[i0] - u[i0] - v
            better = free & (cur < minv)
            minv[better] = cur[better]
            way[better] = j0
            masked = np.where(free, minv, inf)
            j1 = int(np.argmin(masked))
            delta = masked[j1]
            if not np.isfinite(delta):
                raise ValueError("no finite assignment exists")
            u[p[used]] += delta
            v[used] -= delta
            minv[free] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
    assignment = np.zeros(n, dtype=np.int64)
    for j in range(1, m + 1):
        if p[j]:
            assignment[p[j] - 1] = j - 1
    return assignment


def min_weight_max_matching(g: WeightedBipartite) -> Matching:
    """Maximum-cardinality matching of least total weight.

    Solved as one assignment problem: each row may instead take a private
    "unmatched" slot whose penalty exceeds any achievable edge-weight total,
    so cardinality is optimised first. A secondary penalty that grows as the
    row index falls makes the optimum leave the highest-indexed rows
    unmatched whenever there is a choice.
    """
    n = g.right_count
    if n == 0 or not g.edges:
        return Matching((), 0)
    heaviest = [0] * (n + 1)
    for e in g.edges:
        heaviest[e[1]] = max(heaviest[e[1]], g.w(e))
    big = 1 + sum(heaviest)
    scale = n * n + 1
    L = g.left_count
    cost = np.full((n, L + n), np.inf)
    for left, right in g.edges:
        cost[right - 1, left] = g.w((left, right)) * scale
    for i in range(1, n + 1):
        cost[i - 1, L + i - 1] = big * scale + (n + 1 - i)
    assignment = _hungarian(cost)
    pairs = tuple(sorted(
        (int(col), row) for row, col in enumerate(assignment, start=1) if col < L
    ))
    return Matching(pairs, sum(g.w(p) for p in pairs))


def bipartite_of(p: Pattern) -> WeightedBipartite:
    """Unweighted ``B(p)``: left vertex ``j-1`` is column ``j``."""
    return WeightedBipartite(
        left_labels=tuple(range(1, p.cols + 1)),
        right_count=p.rows,
        edges=tuple((c - 1, r) for r, c in p.nonzeros),
    )


def generic_rank(p: Pattern) -> int:
    """Maximum rank over all real matrices with the zero structure of ``p``."""
    adj: list[list[int]] = [[] for _ in range(p.cols)]
    for r, c in p.nonzeros:
        adj[c - 1].append(r)
    match_right = _kuhn(adj, p.rows)
    return sum(1 for left in match_right if left >= 0)


def build_placement_bipartite(system: SwitchedSystem, decomp: SccDecomposition) -> WeightedBipartite:
    """Column/row graph of ``[A_1, ..., A_m, S]`` with surrogate columns at weight one.

    Column ``j`` of ``S`` has a nonzero in every row belonging to the
    ``j``-th non-top-linked SCC of the union digraph.
    """
    n = system.n
    if decomp.vertex_count != n:
        raise DimensionError(f"decomposition over {decomp.vertex_count} vertices for n={n}")
    labels: list[Hashable] = []
    edges = []
    weight = {}
    for k, a in enumerate(system.a_modes, start=1):
        base = len(labels)
        labels.extend(AColumn(k, j) for j in range(1, n + 1))
        edges.extend((base + c - 1, r) for r, c in a.nonzeros)
    for j, members in enumerate(decomp.non_top_linked_sets(), start=1):
        left = len(labels)
        labels.append(SColumn(j))
        for r in sorted(members):
            edges.append((left, r))
            weight[(left, r)] = 1
    return WeightedBipartite(tuple(labels), n, tuple(edges), weight)
