"""Structural (zero/nonzero) matrices and switched systems built from them.

All indices are 1-based, matching the usual matrix notation ``[A]_{ij}``.
Patterns are immutable and keep their nonzeros sorted by ``(row, col)`` so
that every algorithm downstream walks them in a canonical order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .exceptions import DimensionError, ParseError

__all__ = [
    "Pattern",
    "SwitchedSystem",
    "union",
    "concat",
    "parse_system",
    "serialize_system",
    "system_to_dict",
    "system_from_dict",
]


@dataclass(frozen=True)
class Pattern:
    """Sparse 0/1 matrix stored as the sorted tuple of its nonzero positions."""

    rows: int
    cols: int
    nonzeros: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError(f"negative shape {self.rows}x{self.cols}")
        entries = tuple(sorted((int(r), int(c)) for r, c in self.nonzeros))
        for k, (r, c) in enumerate(entries):
            if not (1 <= r <= self.rows and 1 <= c <= self.cols):
                raise DimensionError(
                    f"entry ({r}, {c}) outside a {self.rows}x{self.cols} pattern"
                )
            if k and entries[k - 1] == (r, c):
                raise ValueError(f"duplicate entry ({r}, {c})")
        object.__setattr__(self, "nonzeros", entries)

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Iterable) -> Pattern:
        """Build a pattern, silently merging repeated entries."""
        return cls(rows, cols, tuple(set(map(tuple, entries))))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> Pattern:
        return cls(rows, rows if cols is None else cols)

    @classmethod
    def diagonal(cls, n: int, indices: Iterable[int]) -> Pattern:
        """``n x n`` pattern with nonzero diagonal entries at ``indices``."""
        return cls.from_entries(n, n, ((i, i) for i in indices))

    @classmethod
    def identity(cls, n: int) -> Pattern:
        return cls.diagonal(n, range(1, n + 1))

    @classmethod
    def from_array(cls, array) -> Pattern:
        a = np.asarray(array)
        if a.ndim != 2:
            raise DimensionError("expected a 2-d array")
        r, c = np.nonzero(a)
        return cls(a.shape[0], a.shape[1], tuple(zip(r + 1, c + 1)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def nnz(self) -> int:
        return len(self.nonzeros)

    def __len__(self):
        return len(self.nonzeros)

    def __contains__(self, entry) -> bool:
        return tuple(entry) in set(self.nonzeros)

    def row_support(self) -> frozenset[int]:
        return frozenset(r for r, _ in self.nonzeros)

    def column_support(self) -> frozenset[int]:
        return frozenset(c for _, c in self.nonzeros)

    def columns(self) -> dict[int, tuple[int, ...]]:
        """Map each nonzero column to the rows it touches."""
        out: dict[int, list[int]] = {}
        for r, c in self.nonzeros:
            out.setdefault(c, []).append(r)
        return {c: tuple(rs) for c, rs in sorted(out.items())}

    def to_array(self, dtype=bool) -> np.ndarray:
        a = np.zeros((self.rows, self.cols), dtype=dtype)
        for r, c in self.nonzeros:
            a[r - 1, c - 1] = 1
        return a

    def with_cols(self, cols: int) -> Pattern:
        """Same nonzeros in a wider (or equally wide) pattern."""
        return Pattern(self.rows, cols, self.nonzeros)

    def __str__(self):
        lines = []
        a = self.to_array(dtype=int)
        for row in a:
            lines.append(" ".join(str(v) for v in row))
        return "\n".join(lines)


def union(patterns: Sequence[Pattern]) -> Pattern:
    """Entry-wise OR of equally shaped patterns."""
    patterns = list(patterns)
    if not patterns:
        raise ValueError("union of an empty list")
    shape = patterns[0].shape
    for p in patterns[1:]:
        if p.shape != shape:
            raise DimensionError(f"shape {p.shape} does not match {shape}")
    entries = set()
    for p in patterns:
        entries.update(p.nonzeros)
    return Pattern(shape[0], shape[1], tuple(entries))


def concat(patterns: Sequence[Pattern]) -> Pattern:
    """Horizontal concatenation ``[P1, P2, ...]``."""
    patterns = list(patterns)
    if not patterns:
        raise ValueError("concatenation of an empty list")
    rows = patterns[0].rows
    entries = []
    offset = 0
    for p in patterns:
        if p.rows != rows:
            raise DimensionError(f"row count {p.rows} does not match {rows}")
        entries.extend((r, c + offset) for r, c in p.nonzeros)
        offset += p.cols
    return Pattern(rows, offset, tuple(entries))


@dataclass(frozen=True)
class SwitchedSystem:
    """Structural switched system ``(A_sigma, B_sigma)`` with ``m`` modes.

    ``b_modes`` is ``None`` when no inputs have been placed yet; consumers
    then treat every input matrix as the ``n x n`` zero pattern.
    """

    n: int
    a_modes: tuple[Pattern, ...]
    b_modes: tuple[Pattern, ...] | None = None

    def __post_init__(self):
        a_modes = tuple(self.a_modes)
        if self.n < 1:
            raise DimensionError("state dimension must be at least 1")
        if not a_modes:
            raise ValueError("a switched system needs at least one mode")
        for k, a in enumerate(a_modes, start=1):
            if a.shape != (self.n, self.n):
                raise DimensionError(f"mode {k}: A is {a.rows}x{a.cols}, expected {self.n}x{self.n}")
        object.__setattr__(self, "a_modes", a_modes)
        if self.b_modes is not None:
            b_modes = tuple(self.b_modes)
            if len(b_modes) != len(a_modes):
                raise DimensionError(f"{len(b_modes)} input matrices for {len(a_modes)} modes")
            for k, b in enumerate(b_modes, start=1):
                if b.rows != self.n:
                    raise DimensionError(f"mode {k}: B has {b.rows} rows, expected {self.n}")
            object.__setattr__(self, "b_modes", b_modes)

    @property
    def m(self) -> int:
        return len(self.a_modes)

    @property
    def has_inputs(self) -> bool:
        return self.b_modes is not None

    def inputs(self) -> tuple[Pattern, ...]:
        """Input patterns, defaulting to ``n x n`` zeros."""
        if self.b_modes is None:
            return tuple(Pattern.zeros(self.n) for _ in self.a_modes)
        return self.b_modes

    def a_union(self) -> Pattern:
        return union(self.a_modes)

    def b_union(self) -> Pattern:
        """OR of the input patterns, padded to the widest one."""
        b = self.inputs()
        width = max(p.cols for p in b)
        return union([p.with_cols(width) for p in b])

    def with_inputs(self, b_modes: Sequence[Pattern]) -> SwitchedSystem:
        return SwitchedSystem(self.n, self.a_modes, tuple(b_modes))

    def without_inputs(self) -> SwitchedSystem:
        return SwitchedSystem(self.n, self.a_modes)


def _entries(value, field, rows, cols):
    if not isinstance(value, list):
        raise ParseError("expected a list of [row, col] pairs", field)
    seen = set()
    for k, item in enumerate(value):
        where = f"{field}[{k}]"
        if (
            not isinstance(item, (list, tuple))
            or len(item) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in item)
        ):
            raise ParseError("expected an integer [row, col] pair", where)
        r, c = item
        if not 1 <= r <= rows:
            raise ParseError(f"row index {r} out of range 1..{rows}", where)
        if not 1 <= c <= cols:
            raise ParseError(f"column index {c} out of range 1..{cols}", where)
        if (r, c) in seen:
            raise ParseError(f"duplicate entry [{r}, {c}]", where)
        seen.add((r, c))
    return tuple(seen)


def system_from_dict(doc) -> SwitchedSystem:
    """Build a system from the decoded JSON document."""
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError("must be a positive integer", "n")
    modes = doc.get("modes")
    if not isinstance(modes, list) or not modes:
        raise ParseError("must be a non-empty list", "modes")
    a_modes, b_modes = [], []
    for k, mode in enumerate(modes):
        where = f"modes[{k}]"
        if not isinstance(mode, dict):
            raise ParseError("must be an object", where)
        unknown = set(mode) - {"A", "B", "p"}
        if unknown:
            raise ParseError(f"unknown keys {sorted(unknown)}", where)
        if "A" not in mode:
            raise ParseError("missing", f"{where}.A")
        a_modes.append(Pattern(n, n, _entries(mode["A"], f"{where}.A", n, n)))
        p = mode.get("p", n)
        if not isinstance(p, int) or isinstance(p, bool) or p < 0:
            raise ParseError("must be a non-negative integer", f"{where}.p")
        if "B" in mode:
            b_modes.append(Pattern(n, p, _entries(mode["B"], f"{where}.B", n, p)))
        else:
            b_modes.append(None)
    if all(b is None for b in b_modes):
        return SwitchedSystem(n, tuple(a_modes))
    b_full = tuple(Pattern.zeros(n) if b is None else b for b in b_modes)
    return SwitchedSystem(n, tuple(a_modes), b_full)


def parse_system(text: str) -> SwitchedSystem:
    """Parse the JSON wire format ``{"n": int, "modes": [{"A": ..., "B": ...}]}``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
    return system_from_dict(doc)


def _pairs(p: Pattern):
    return [list(e) for e in p.nonzeros]


def system_to_dict(system: SwitchedSystem) -> dict:
    modes = []
    for k, a in enumerate(system.a_modes):
        mode = {"A": _pairs(a)}
        if system.b_modes is not None:
            b = system.b_modes[k]
            mode["B"] = _pairs(b)
            if b.cols != system.n:
                mode["p"] = b.cols
        modes.append(mode)
    return {"n": system.n, "modes": modes}


def serialize_system(system: SwitchedSystem) -> str:
    return json.dumps(system_to_dict(system), sort_keys=True)
