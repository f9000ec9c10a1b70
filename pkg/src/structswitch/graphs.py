"""State digraphs, their strongly connected components, and input accessibility.

A structural matrix ``A`` induces the state digraph with an edge ``x_k -> x_j``
for every nonzero ``[A]_{jk}``: column is the tail, row is the head.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

from .exceptions import DimensionError
from .patterns import Pattern

__all__ = [
    "Digraph",
    "SccDecomposition",
    "ConditionCheck",
    "build_state_digraph",
    "scc_decompose",
    "accessible_set",
    "condition_i_holds",
    "to_dot",
]


@dataclass(frozen=True)
class Digraph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        edges = tuple(sorted(set((int(u), int(v)) for u, v in self.edges)))
        if len(edges) != len(tuple(self.edges)):
            raise ValueError("duplicate edges")
        for u, v in edges:
            if not (1 <= u <= self.vertex_count and 1 <= v <= self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) outside 1..{self.vertex_count}")
        object.__setattr__(self, "edges", edges)

    def successors(self) -> list[list[int]]:
        """Adjacency lists indexed by vertex (slot 0 unused)."""
        adj: list[list[int]] = [[] for _ in range(self.vertex_count + 1)]
        for u, v in self.edges:
            adj[u].append(v)
        return adj


def build_state_digraph(pattern: Pattern) -> Digraph:
    if pattern.rows != pattern.cols:
        raise DimensionError(f"state digraph needs a square pattern, got {pattern.rows}x{pattern.cols}")
    return Digraph(pattern.rows, tuple((k, j) for j, k in pattern.nonzeros))


@dataclass(frozen=True)
class SccDecomposition:
    """Condensation of a digraph.

    Component ids are 1-based and ordered by the smallest vertex they contain.
    """

    component_of: dict[int, int]
    components: tuple[frozenset[int], ...]
    dag_edges: frozenset[tuple[int, int]]
    non_top_linked: tuple[int, ...]

    @property
    def vertex_count(self) -> int:
        return len(self.component_of)

    def members(self, component: int) -> frozenset[int]:
        return self.components[component - 1]

    def non_top_linked_sets(self) -> list[frozenset[int]]:
        """Vertex sets of the non-top-linked components, in id order."""
        return [self.members(c) for c in self.non_top_linked]


def _tarjan(n: int, adj: list[list[int]]) -> list[list[int]]:
    # Iterative Tarjan; recursion would overflow on long paths.
    index = [0] * (n + 1)
    low = [0] * (n + 1)
    on_stack = [False] * (n + 1)
    stack: list[int] = []
    counter = 1
    out: list[list[int]] = []
    for root in range(1, n + 1):
        if index[root]:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(adj[v]):
                work[-1] = (v, i + 1)
                w = adj[v][i]
                if not index[w]:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                out.append(comp)
    return out


def scc_decompose(g: Digraph) -> SccDecomposition:
    raw = _tarjan(g.vertex_count, g.successors())
    raw.sort(key=min)
    component_of = {}
    for cid, comp in enumerate(raw, start=1):
        for v in comp:
            component_of[v] = cid
    dag_edges = frozenset(
        (component_of[u], component_of[v])
        for u, v in g.edges
        if component_of[u] != component_of[v]
    )
    has_incoming = {b for _, b in dag_edges}
    non_top = tuple(c for c in range(1, len(raw) + 1) if c not in has_incoming)
    return SccDecomposition(
        component_of=component_of,
        components=tuple(frozenset(c) for c in raw),
        dag_edges=dag_edges,
        non_top_linked=non_top,
    )


def accessible_set(state_digraph: Digraph, b_union: Pattern) -> frozenset[int]:
    """States reachable from some input, actuated states included."""
    if b_union.rows != state_digraph.vertex_count:
        raise DimensionError(
            f"input pattern has {b_union.rows} rows for {state_digraph.vertex_count} states"
        )
    adj = state_digraph.successors()
    seen = set(b_union.row_support())
    queue = deque(sorted(seen))
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return frozenset(seen)


class ConditionCheck(NamedTuple):
    holds: bool
    uncovered: tuple[int, ...]


def condition_i_holds(decomp: SccDecomposition, b_union: Pattern) -> ConditionCheck:
    """Does every non-top-linked SCC contain a directly actuated state?

    ``uncovered`` lists the ids of the components that do not, ascending.
    """
    if b_union.rows != decomp.vertex_count:
        raise DimensionError(
            f"input pattern has {b_union.rows} rows for {decomp.vertex_count} states"
        )
    actuated = b_union.row_support()
    uncovered = tuple(
        c for c in decomp.non_top_linked if not (decomp.members(c) & actuated)
    )
    return ConditionCheck(not uncovered, uncovered)


def to_dot(a: Pattern, b: Pattern | None = None, name: str = "G") -> str:
    """Graphviz rendering of the system digraph of ``(a, b)``.

    Each SCC becomes a dashed cluster; non-top-linked ones are labelled
    ``N{j}^T`` in id order. Inputs are drawn as boxes.
    """
    g = build_state_digraph(a)
    decomp = scc_decompose(g)
    ntl_rank = {c: j for j, c in enumerate(decomp.non_top_linked, start=1)}
    lines = [f"digraph {name} {{"]
    for cid, comp in enumerate(decomp.components, start=1):
        lines.append(f"  subgraph cluster_{cid} {{")
        lines.append("    style=dashed;")
        lines.append("    color=gray;")
        if cid in ntl_rank:
            lines.append(f'    label="N{ntl_rank[cid]}^T";')
        else:
            lines.append('    label="";')
        for v in sorted(comp):
            lines.append(f'    x{v} [label="x{v}", shape=circle];')
        lines.append("  }")
    input_edges = []
    if b is not None:
        if b.rows != a.rows:
            raise DimensionError("input pattern row count does not match the state dimension")
        for col, rows in b.columns().items():
            lines.append(f'  u{col} [label="u{col}", shape=box];')
            input_edges.extend((col, r) for r in rows)
    for u, v in g.edges:
        lines.append(f"  x{u} -> x{v};")
    for col, r in input_edges:
        lines.append(f"  u{col} -> x{r};")
    lines.append("}")
    return "\n".join(lines) + "\n"
