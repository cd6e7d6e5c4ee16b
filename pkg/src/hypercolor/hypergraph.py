"""Hypergraphs under three edge representations.

Vertices are natural numbers.  An edge is one of

* :class:`Finite` -- an explicit, strictly increasing tuple of vertices;
* :class:`CharFn` -- a 0/1 membership function, tabulated, with an optional
  support bound past which it is known to vanish;
* :class:`TailFrom` -- the infinite set ``{k : k >= start}``.

A :class:`Hypergraph` pairs an ordered edge list with a universe (a finite
window ``{0..n-1}`` or all of N) and a representation tag.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Mapping, Optional, Union

from .errors import (
    EdgeIndexError,
    EdgeNotContained,
    NonFiniteEdge,
    OutsideUniverse,
    RepresentationMismatch,
    Unbounded,
)


class Repr(str, enum.Enum):
    SET = "set"
    SEQ = "seq"
    CHARFN = "charfn"


@dataclass(frozen=True)
class Finite:
    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(int(v) for v in self.vertices)
        if any(v < 0 for v in vs):
            raise ValueError("vertices are natural numbers")
        if any(a >= b for a, b in zip(vs, vs[1:])):
            raise ValueError(f"finite edge must be strictly increasing, got {vs}")
        object.__setattr__(self, "vertices", vs)

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "Finite":
        return cls(tuple(sorted(set(vertices))))

    def contains(self, v: int) -> bool:
        return v in self.vertices

    def extent(self) -> tuple[int, ...]:
        return self.vertices

    @property
    def is_finite(self) -> bool:
        return True


@dataclass(frozen=True)
class CharFn:
    """Characteristic function of an edge.

    ``table[v]`` gives membership for ``v < len(table)``.  With a ``bound`` the
    function is 0 from ``bound`` on; without one, queries past the table are
    unanswerable and raise :class:`Unbounded`.  ``oracle`` may replace the
    table for pointwise evaluation of generated edges.
    """

    table: Optional[tuple[int, ...]] = None
    bound: Optional[int] = None
    oracle: Optional[Callable[[int], int]] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.table is None and self.oracle is None:
            raise ValueError("CharFn needs a table or an oracle")
        if self.table is not None:
            t = tuple(int(b) for b in self.table)
            if any(b not in (0, 1) for b in t):
                raise ValueError("characteristic function values must be 0 or 1")
            if self.bound is not None:
                if any(t[self.bound:]):
                    raise ValueError("table has members at or above its support bound")
                t = t[: self.bound]
            object.__setattr__(self, "table", t)
        if self.bound is not None and self.bound < 0:
            raise ValueError("support bound must be natural")

    @classmethod
    def from_set(cls, vertices: Iterable[int]) -> "CharFn":
        vs = set(vertices)
        bound = max(vs) + 1 if vs else 0
        return cls(tuple(1 if v in vs else 0 for v in range(bound)), bound)

    def contains(self, v: int) -> bool:
        if self.bound is not None and v >= self.bound:
            return False
        if self.oracle is not None:
            return bool(self.oracle(v))
        if v < len(self.table):
            return bool(self.table[v])
        raise Unbounded()

    def extent(self) -> tuple[int, ...]:
        if self.bound is None:
            raise Unbounded()
        return tuple(v for v in range(self.bound) if self.contains(v))

    def tabulate(self) -> tuple[int, ...]:
        """Table of length ``bound``; needs a bound."""
        if self.bound is None:
            raise Unbounded()
        return tuple(int(self.contains(v)) for v in range(self.bound))

    @property
    def is_finite(self) -> bool:
        return self.bound is not None


@dataclass(frozen=True)
class TailFrom:
    start: int

    def __post_init__(self):
        if self.start < 0:
            raise ValueError("tail start must be natural")

    def contains(self, v: int) -> bool:
        return v >= self.start

    def extent(self):
        raise NonFiniteEdge(None)

    @property
    def is_finite(self) -> bool:
        return False


Edge = Union[Finite, CharFn, TailFrom]


@dataclass(frozen=True)
class Hypergraph:
    """``window=None`` means the universe is all of N."""

    edges: tuple[Edge, ...]
    repr: Repr = Repr.SEQ
    window: Optional[int] = None
    labels: Optional[tuple[Any, ...]] = field(default=None, compare=False)
    meta: Optional[Mapping[str, Any]] = field(default=None, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(self.edges))
        object.__setattr__(self, "repr", Repr(self.repr))
        if self.window is not None and self.window < 0:
            raise ValueError("window must be natural")
        if self.repr in (Repr.SET, Repr.SEQ):
            for i, e in enumerate(self.edges):
                if not isinstance(e, Finite):
                    raise RepresentationMismatch(f"edge {i}: {self.repr.value!r} graphs need finite edges")
        else:
            for i, e in enumerate(self.edges):
                if not isinstance(e, (CharFn, TailFrom)):
                    raise RepresentationMismatch(f"edge {i}: 'charfn' graphs need CharFn or TailFrom edges")
        if self.window is not None:
            for e in self.edges:
                if isinstance(e, Finite) and e.vertices and e.vertices[-1] >= self.window:
                    raise OutsideUniverse(e.vertices[-1], self.window)
        if self.repr is Repr.SET and len(set(self.edges)) != len(self.edges):
            raise ValueError("a set of edges cannot repeat an edge")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def edge(self, index: int) -> Edge:
        if not 0 <= index < len(self.edges):
            raise EdgeIndexError(index, len(self.edges))
        return self.edges[index]

    def label_index(self) -> dict:
        """Map symbolic vertex label to integer code (gadget outputs only)."""
        if self.labels is None:
            raise KeyError("hypergraph carries no label table")
        return {lab: i for i, lab in enumerate(self.labels)}

    def finite_edges(self) -> list[tuple[int, ...]]:
        """Vertex tuples of every edge; raises for infinite or unbounded ones."""
        out = []
        for i, e in enumerate(self.edges):
            try:
                out.append(e.extent())
            except Unbounded:
                raise Unbounded(i) from None
            except NonFiniteEdge:
                raise NonFiniteEdge(i) from None
        return out


def seq_graph(edges: Iterable[Iterable[int]], window: Optional[int] = None, repr: Repr = Repr.SEQ) -> Hypergraph:
    """Convenience constructor from plain vertex collections."""
    fin = tuple(Finite.of(e) for e in edges)
    if window is None:
        window = 1 + max((e.vertices[-1] for e in fin if e.vertices), default=-1)
    return Hypergraph(fin, repr, window)


def edge_contains(h: Hypergraph, edge_index: int, v: int) -> bool:
    e = h.edge(edge_index)
    if v < 0 or (h.window is not None and v >= h.window):
        raise OutsideUniverse(v, h.window)
    return e.contains(v)


@dataclass(frozen=True)
class PartialHypergraph:
    vertices: frozenset[int]
    edge_indices: frozenset[int]

    def to_hypergraph(self, parent: Hypergraph) -> Hypergraph:
        edges = [parent.edges[i] for i in sorted(self.edge_indices)]
        fin = tuple(e if isinstance(e, Finite) else Finite(e.extent()) for e in edges)
        return Hypergraph(fin, Repr.SEQ, parent.window, parent.labels, parent.meta)


@dataclass(frozen=True)
class SubEdge:
    index: int
    vertices: frozenset[int]

    @property
    def empty(self) -> bool:
        return not self.vertices


@dataclass(frozen=True)
class PartialSubhypergraph:
    vertices: frozenset[int]
    edges: tuple[SubEdge, ...]

    def nonempty(self) -> "PartialSubhypergraph":
        return PartialSubhypergraph(self.vertices, tuple(e for e in self.edges if not e.empty))

    def to_hypergraph(self, window: Optional[int] = None) -> Hypergraph:
        if window is None:
            window = max(self.vertices) + 1 if self.vertices else 0
        fin = tuple(Finite(tuple(sorted(e.vertices))) for e in self.edges)
        return Hypergraph(fin, Repr.SEQ, window)


def partial_hypergraph(h: Hypergraph, vs: Iterable[int], idxs: Iterable[int]) -> PartialHypergraph:
    vset = frozenset(vs)
    iset = frozenset(idxs)
    for i in sorted(iset):
        e = h.edge(i)
        if not e.is_finite:
            raise NonFiniteEdge(i)
        if not set(e.extent()) <= vset:
            raise EdgeNotContained(i)
    return PartialHypergraph(vset, iset)


def partial_subhypergraph(h: Hypergraph, vs: Iterable[int]) -> PartialSubhypergraph:
    """Intersect every edge with a finite vertex set; empty intersections are kept."""
    vset = frozenset(vs)
    ordered = sorted(vset)
    edges = []
    for i, e in enumerate(h.edges):
        if isinstance(e, Finite):
            inter = vset.intersection(e.vertices)
        else:
            inter = frozenset(v for v in ordered if e.contains(v))
        edges.append(SubEdge(i, frozenset(inter)))
    return PartialSubhypergraph(vset, tuple(edges))


def level_bounds(h: Hypergraph, n_levels: int) -> list[int]:
    """``[m_0, m_1, ..., m_n]``: the strictly increasing vertex bounds of the levels.

    ``m_0`` is 0; ``m_n`` is the least integer above ``m_{n-1}`` covering every
    vertex of the first ``n`` edges.
    """
    if h.repr is Repr.CHARFN:
        raise RepresentationMismatch("levels by vertex bound need finite edge codes")
    bounds = [0]
    top = 0
    for n in range(1, n_levels + 1):
        if n <= len(h.edges):
            vs = h.edges[n - 1].vertices
            if vs:
                top = max(top, vs[-1])
        bounds.append(max(top, bounds[-1] + 1))
    return bounds


def restriction_level(h: Hypergraph, n: int) -> tuple[int, PartialHypergraph]:
    m = level_bounds(h, n)[n]
    k = min(n, len(h.edges))
    return m, PartialHypergraph(frozenset(range(m + 1)), frozenset(range(k)))
