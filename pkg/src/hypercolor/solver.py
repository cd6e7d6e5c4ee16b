"""Level-by-level search through the tree of partial colorings.

Two level geometries are used:

* vertex-bound levels (finite edges, every mode): level ``n`` colors vertices
  ``0..m_n`` and must satisfy the first ``n`` edges, where ``m_n`` comes from
  :func:`~hypercolor.hypergraph.level_bounds`;
* square levels (characteristic-function edges, strong mode only): level
  ``n`` colors vertices ``0..n-1`` and must be injective on the first ``n``
  edges cut down to those vertices.

A node at level ``n+1`` always restricts to a node at level ``n``, so the
nodes form a tree; depth-first search with smallest-color-first branching
returns the lexicographically least deepest node.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from . import _kernels
from .colorings import Coloring, Mode
from .errors import RepresentationMismatch, Unbounded
from .hypergraph import CharFn, Hypergraph, Repr, level_bounds

_MODE_CODE = {
    Mode.PROPER: _kernels.PROPER,
    Mode.STRONG: _kernels.STRONG,
    Mode.CONFLICT_FREE: _kernels.CONFLICT_FREE,
}


@dataclass(frozen=True)
class Colored:
    coloring: Coloring
    levels: int

    def to_json(self) -> dict:
        from .serialize import coloring_to_json

        return {"status": "colored", "levels": self.levels, "coloring": coloring_to_json(self.coloring)}


@dataclass(frozen=True)
class Uncolorable:
    """No node exists at ``level``; ``length`` is the sequence length that level demands."""

    level: int
    length: int

    def to_json(self) -> dict:
        return {"status": "uncolorable", "level": self.level, "length": self.length}


@dataclass(frozen=True)
class DepthExhausted:
    """Nodes survive to ``level`` but the graph is not exhausted by that depth."""

    level: int
    partial: tuple[int, ...]

    def to_json(self) -> dict:
        return {"status": "depth_exhausted", "level": self.level, "partial": list(self.partial)}


SolveOutcome = Union[Colored, Uncolorable, DepthExhausted]


@dataclass(frozen=True)
class _Plan:
    npos: int
    ends: list[int]  # ends[n]: last position of level n
    pos_ptr: list[int]
    chk_ptr: list[int]
    verts: list[int]
    covered: bool  # a full-depth node colors the whole graph


def _geometry(h: Hypergraph, mode: Mode) -> str:
    if h.repr is Repr.CHARFN:
        if mode is not Mode.STRONG:
            raise RepresentationMismatch(
                "proper and conflict-free search need finite edge codes; convert characteristic functions first"
            )
        return "square"
    return "bound"


def _pack(npos: int, per_pos: list[list[tuple[int, ...]]]) -> tuple[list[int], list[int], list[int]]:
    pos_ptr, chk_ptr, verts = [0], [0], []
    for p in range(npos):
        for cons in per_pos[p]:
            verts.extend(cons)
            chk_ptr.append(len(verts))
        pos_ptr.append(len(chk_ptr) - 1)
    return pos_ptr, chk_ptr, verts


def _bound_plan(h: Hypergraph, levels: int) -> _Plan:
    ends = level_bounds(h, levels)
    npos = ends[levels] + 1
    per_pos: list[list[tuple[int, ...]]] = [[] for _ in range(npos)]
    for j in range(min(levels, len(h.edges))):
        vs = h.edges[j].vertices
        at = max(vs[-1] if vs else 0, ends[j] + 1)
        per_pos[at].append(vs)
    return _Plan(npos, ends, *_pack(npos, per_pos), covered=levels >= len(h.edges))


def _member(h: Hypergraph, j: int, v: int) -> bool:
    if h.window is not None and v >= h.window:
        return False
    try:
        return h.edges[j].contains(v)
    except Unbounded:
        raise Unbounded(j) from None


def _square_plan(h: Hypergraph, levels: int) -> _Plan:
    npos = levels
    ends = [n - 1 for n in range(levels + 1)]
    per_pos: list[list[tuple[int, ...]]] = [[] for _ in range(npos)]
    for p in range(npos):
        for j in range(min(p + 1, len(h.edges))):
            if j == p or _member(h, j, p):
                cut = tuple(v for v in range(p + 1) if _member(h, j, v))
                if len(cut) >= 2:
                    per_pos[p].append(cut)
    covered = levels >= len(h.edges) and all(
        isinstance(e, CharFn) and e.bound is not None and e.bound <= levels for e in h.edges
    )
    return _Plan(npos, ends, *_pack(npos, per_pos), covered=covered)


def _plan(h: Hypergraph, mode: Mode, levels: int) -> _Plan:
    if levels < 0:
        raise ValueError("level must be natural")
    return _square_plan(h, levels) if _geometry(h, mode) == "square" else _bound_plan(h, levels)


def level_length(h: Hypergraph, mode: Mode, n: int) -> int:
    """Length of the color sequences at level ``n``."""
    mode = Mode(mode)
    if _geometry(h, mode) == "square":
        return n
    return level_bounds(h, n)[n] + 1


def level_nodes(h: Hypergraph, k: int, mode: Mode, n: int) -> list[tuple[int, ...]]:
    """Every color sequence that is a node of the tree at level ``n``, in lexicographic order."""
    mode = Mode(mode)
    plan = _plan(h, mode, n)
    sols, _ = _kernels.search(plan.npos, k, _MODE_CODE[mode], plan.pos_ptr, plan.chk_ptr, plan.verts, 0)
    return sols


def _window_coloring(h: Hypergraph, k: int, seq: tuple[int, ...]) -> Coloring:
    colors = list(seq)
    if h.window is not None:
        colors = colors[: h.window] + [0] * max(0, h.window - len(colors))
    return Coloring(max(k, 1), colors, ())


def solve(h: Hypergraph, k: int, mode: Mode, max_level: Optional[int] = None) -> SolveOutcome:
    """Search the coloring tree down to ``max_level`` (default: number of edges).

    ``Colored`` when a node at ``max_level`` colors every edge, ``DepthExhausted``
    when one exists but edges remain beyond reach, and ``Uncolorable(n)`` with
    ``n`` the least empty level otherwise.
    """
    mode = Mode(mode)
    if max_level is None:
        max_level = len(h.edges)
    plan = _plan(h, mode, max_level)
    # vertices outside every constraint cannot change the outcome; pin them to color 0
    used = set(plan.verts)
    ncol = [k if p in used else min(k, 1) for p in range(plan.npos)]
    sols, max_pass = _kernels.search(
        plan.npos, k, _MODE_CODE[mode], plan.pos_ptr, plan.chk_ptr, plan.verts, 1, ncol
    )
    if sols:
        if plan.covered:
            return Colored(_window_coloring(h, k, sols[0]), max_level)
        return DepthExhausted(max_level, sols[0])
    deepest = max(n for n in range(max_level + 1) if plan.ends[n] <= max_pass) if max_pass >= plan.ends[0] else -1
    failed = deepest + 1
    return Uncolorable(failed, plan.ends[failed] + 1)


def all_colorings(h: Hypergraph, k: int, mode: Mode, limit: int = 0) -> list[Coloring]:
    """Every coloring of the window (up to ``limit``) satisfying ``mode`` on all edges.

    Each edge is checked once its largest vertex is colored, so this is plain
    exhaustive backtracking over the vertices rather than the level tree.
    """
    mode = Mode(mode)
    edges = h.finite_edges()
    npos = h.window if h.window is not None else 1 + max((e[-1] for e in edges if e), default=-1)
    if any(not e for e in edges) and mode is Mode.CONFLICT_FREE:
        return []
    per_pos: list[list[tuple[int, ...]]] = [[] for _ in range(npos)]
    for e in edges:
        if e:
            per_pos[e[-1]].append(e)
    sols, _ = _kernels.search(npos, k, _MODE_CODE[mode], *_pack(npos, per_pos), limit)
    return [Coloring(max(k, 1), s, ()) for s in sols]
