"""Hypergraphs built from finite injections, with their local colorings and decoders.

Each generator returns a :class:`~hypercolor.hypergraph.Hypergraph` whose
``labels`` table names every vertex (``("b", m)``, ``("v", n, j)``,
``("u", i)``...) and whose ``meta`` records the injections, so decoders work
on deserialized instances too.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from ..colorings import Coloring, Mode, verify
from ..errors import ImproperColoring, NotFound, RangesIntersect
from ..hypergraph import CharFn, Finite, Hypergraph, PartialHypergraph, PartialSubhypergraph, Repr


@dataclass(frozen=True)
class Injection:
    """An injection on ``{0..d-1}`` given by its list of values."""

    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(x) for x in self.values)
        if any(x < 0 for x in vals):
            raise ValueError("injection values must be natural")
        if len(set(vals)) != len(vals):
            raise ValueError(f"values {vals} are not pairwise distinct")
        object.__setattr__(self, "values", vals)

    @classmethod
    def coerce(cls, f) -> "Injection":
        return f if isinstance(f, Injection) else cls(tuple(f))

    @property
    def d(self) -> int:
        return len(self.values)

    def __call__(self, t: int) -> int:
        return self.values[t]

    def range(self) -> frozenset[int]:
        return frozenset(self.values)

    def preimage(self, y: int) -> Optional[int]:
        try:
            return self.values.index(y)
        except ValueError:
            return None


def cantor_pair(a: int, b: int) -> int:
    return (a + b) * (a + b + 1) // 2 + b


def cantor_unpair(z: int) -> tuple[int, int]:
    w = (math.isqrt(8 * z + 1) - 1) // 2
    b = z - w * (w + 1) // 2
    return w - b, b


# -- edge sequence to edge set ------------------------------------------------


def thm3_gadget(g) -> Hypergraph:
    """Edges ``e_n = {0, g(n)+1}``: membership in the edge set decides the range of ``g``."""
    g = Injection.coerce(g)
    edges = tuple(Finite((0, y + 1)) for y in g.values)
    window = max(g.values, default=-1) + 2
    return Hypergraph(edges, Repr.SEQ, window, meta={"gadget": "thm3", "g": g.values})


def thm3_decode(edge_set: Iterable[Iterable[int]], m: int) -> bool:
    return frozenset((0, m + 1)) in {frozenset(e) for e in edge_set}


# -- characteristic functions to codes ----------------------------------------


def _thm4_member(g: Injection, i: int, n: int) -> int:
    if n % 2 == 0:
        return 1 if n in (2 * i, 2 * i + 2) else 0
    j = (n - 1) // 2
    return 1 if j < g.d and g(j) == i else 0


def thm4_gadget(g, n_edges: Optional[int] = None) -> Hypergraph:
    """Characteristic functions ``e_i`` holding ``2i``, ``2i+2`` and ``2j+1`` whenever ``g(j) = i``.

    ``n_edges`` defaults to one past the largest value of ``g``.  Edge ``i``
    carries the support bound ``max(2i, 2d) + 3``.
    """
    g = Injection.coerce(g)
    if n_edges is None:
        n_edges = max(g.values, default=0) + 1
    edges = []
    for i in range(n_edges):
        bound = max(2 * i, 2 * g.d) + 3
        edges.append(CharFn(tuple(_thm4_member(g, i, n) for n in range(bound)), bound))
    window = max((e.bound for e in edges), default=0)
    return Hypergraph(tuple(edges), Repr.CHARFN, window, meta={"gadget": "thm4", "g": g.values})


def thm4_decode(codes: Sequence[Iterable[int]], y: int) -> bool:
    """Scan the codes for the set holding ``2y`` and ``2y+2``; ``y`` is in the range iff it has a third element."""
    for s in codes:
        s = frozenset(s)
        if 2 * y in s and 2 * y + 2 in s:
            return len(s) > 2
    raise NotFound(f"no code contains both {2 * y} and {2 * y + 2}")


# -- proper 2-colorings with characteristic-function edges ---------------------


def _thm6_sizes(f: Injection, n_max: int) -> tuple[int, int]:
    b_top = 2 * max(n_max, f.d - 1) + 1
    j_top = 2 * f.d
    return b_top, j_top


def thm6_gadget(f, n_max: int) -> Hypergraph:
    """Window of the chain gadget: ``b_m`` for ``m <= b_top``, ``v_{n,j}`` for ``n < n_max, j <= 2d``.

    Edges ``p_{n,i} = {v_{n,i}, v_{n,i+1}}``, ``q_n = {b_n, b_{n+1}}``,
    ``r_t = {b_{2t}, v_{f(t),2t}}`` and ``s_n = {v_{n,0}, b_{2n+1}} + {b_{2i} : f(i) = n}``,
    kept when all their vertices are in the window.  ``b_top`` is
    ``2*max(n_max, d-1) + 1`` so that every ``r_t`` and ``s_n`` with
    ``f(t) < n_max`` is whole.
    """
    f = Injection.coerce(f)
    if n_max < 0:
        raise ValueError("n_max must be natural")
    b_top, j_top = _thm6_sizes(f, n_max)
    labels = [("b", m) for m in range(b_top + 1)]
    labels += [("v", n, j) for n in range(n_max) for j in range(j_top + 1)]
    code = {lab: i for i, lab in enumerate(labels)}

    sets: list[list[tuple]] = []
    sets += [[("b", n), ("b", n + 1)] for n in range(b_top)]
    for n in range(n_max):
        sets += [[("v", n, i), ("v", n, i + 1)] for i in range(j_top)]
    for t, y in enumerate(f.values):
        if y < n_max:
            sets.append([("b", 2 * t), ("v", y, 2 * t)])
    for n in range(n_max):
        s = [("v", n, 0), ("b", 2 * n + 1)]
        t = f.preimage(n)
        if t is not None:
            s.append(("b", 2 * t))
        sets.append(s)

    edges = tuple(CharFn.from_set(code[x] for x in s) for s in sets)
    meta = {"gadget": "thm6", "f": f.values, "n_max": n_max}
    return Hypergraph(edges, Repr.CHARFN, len(labels), tuple(labels), meta)


def thm6_local_coloring(h: Hypergraph, G: PartialSubhypergraph) -> Coloring:
    """Proper 2-coloring of a finite partial subhypergraph ``G``.

    ``b_n -> n mod 2``; ``v_{n,j} -> j mod 2``, shifted by one when
    ``f(t) = n`` for some ``t`` with ``b_{2t}`` in ``G``.  Shifting on every
    ``t <= n0`` (``n0`` the largest ``n`` with ``b_{2n}`` in ``G``) instead
    leaves ``s_n`` monochromatic once ``b_{2t}`` is cut away, so only the
    ``b_{2t}`` actually present count.  Returned over the whole window.
    """
    f = Injection(h.meta["f"])
    labels = h.labels
    present = {labels[v][1] // 2 for v in G.vertices if labels[v][0] == "b" and labels[v][1] % 2 == 0}
    hit = {f(t) for t in present if t < f.d}
    colors = []
    for lab in labels:
        if lab[0] == "b":
            colors.append(lab[1] % 2)
        else:
            _, n, j = lab
            colors.append((j + (1 if n in hit else 0)) % 2)
    return Coloring(2, colors)


def _require(h: Hypergraph, c: Coloring, mode: Mode) -> None:
    rep = verify(h, c, mode)
    if not rep.ok:
        raise ImproperColoring(mode.value, rep.failing_edge)


def thm6_decode(h: Hypergraph, c: Coloring, n_max: Optional[int] = None) -> set[int]:
    """``{n < n_max : chi(v_{n,0}) = 1}`` after recoloring so that ``chi(b_0) = 0``."""
    _require(h, c, Mode.PROPER)
    if n_max is None:
        n_max = h.meta["n_max"]
    code = h.label_index()
    if c(code[("b", 0)]) != 0:
        c = c.swapped()
    return {n for n in range(n_max) if c(code[("v", n, 0)]) == 1}


# -- strong colorings: separating disjoint ranges ------------------------------


def _disjoint(f: Injection, g: Injection) -> None:
    common = f.range() & g.range()
    if common:
        raise RangesIntersect(f"ranges share {sorted(common)}")


def _strong3_default_window(f: Injection, g: Injection) -> int:
    return max(f.values + g.values + (f.d, g.d), default=0) + 2


def thm7_strong3_gadget(f, g, window: Optional[int] = None) -> Hypergraph:
    """Triples ``{u_i, u_j, v_k}`` for ``k < window`` with ``i, j < k``, ``f(t) = i`` and ``g(t') = j`` for some ``t, t' < k``.

    Codes: ``u_i = 2i``, ``v_i = 2i + 1``.  The default window is large enough
    that every range pair of ``f`` and ``g`` shares an edge.
    """
    f, g = Injection.coerce(f), Injection.coerce(g)
    _disjoint(f, g)
    if window is None:
        window = _strong3_default_window(f, g)
    edges = []
    for k in range(window):
        fi = sorted(f(t) for t in range(min(k, f.d)) if f(t) < k)
        gj = sorted(g(t) for t in range(min(k, g.d)) if g(t) < k)
        for i in fi:
            for j in gj:
                edges.append(Finite.of((2 * i, 2 * j, 2 * k + 1)))
    labels = tuple(("u", i // 2) if i % 2 == 0 else ("v", i // 2) for i in range(2 * window))
    meta = {"gadget": "thm7-strong3", "f": f.values, "g": g.values, "window": window}
    return Hypergraph(tuple(edges), Repr.SET, 2 * window, labels, meta)


def thm7_strong3_local_coloring(h: Hypergraph, H0: PartialHypergraph, j_n: Optional[int] = None) -> Coloring:
    """Color 0 to ``u_i`` with ``f(t) = i`` for some ``t < j_n``, color 1 likewise for ``g``, color 2 elsewhere.

    ``j_n`` defaults to the largest ``v``-index in ``H0`` (0 if there is none).
    The coloring covers codes up to the largest vertex of ``H0``.
    """
    f, g = Injection(h.meta["f"]), Injection(h.meta["g"])
    labels = h.labels
    if j_n is None:
        j_n = max((labels[x][1] for x in H0.vertices if labels[x][0] == "v"), default=0)
    from_f = {f(t) for t in range(min(j_n, f.d))}
    from_g = {g(t) for t in range(min(j_n, g.d))}
    colors = []
    for x in range(max(H0.vertices, default=-1) + 1):
        kind, i = labels[x]
        if kind == "u" and i in from_f:
            colors.append(0)
        elif kind == "u" and i in from_g:
            colors.append(1)
        else:
            colors.append(2)
    return Coloring(3, colors)


def _strong2_default_window(f: Injection, g: Injection) -> int:
    if f.d == 0 or g.d == 0:
        return 0
    return cantor_pair(f.d - 1, g.d - 1) + 1


def thm7_strong2_gadget(f, g, window: Optional[int] = None) -> Hypergraph:
    """Pair edges ``e_i = {v_{f(i0)}, v_{g(i1)}}`` with ``i -> (i0, i1)`` the Cantor pairing.

    Indices ``i < window`` whose components fall outside the domains are
    skipped; ``meta["indices"]`` lists the index of each kept edge.
    """
    f, g = Injection.coerce(f), Injection.coerce(g)
    _disjoint(f, g)
    if window is None:
        window = _strong2_default_window(f, g)
    edges, indices = [], []
    for i in range(window):
        a, b = cantor_unpair(i)
        if a < f.d and b < g.d:
            edges.append(Finite.of((f(a), g(b))))
            indices.append(i)
    n_vertices = max(f.values + g.values, default=-1) + 1
    labels = tuple(("v", n) for n in range(n_vertices))
    meta = {"gadget": "thm7-strong2", "f": f.values, "g": g.values, "window": window, "indices": tuple(indices)}
    return Hypergraph(tuple(edges), Repr.SEQ, n_vertices, labels, meta)


def thm7_strong2_local_coloring(h: Hypergraph, vertices: Iterable[int], b: int) -> Coloring:
    """Color 0 to ``v_{f(t)}`` for ``t < b`` and 1 to every other listed vertex."""
    f = Injection(h.meta["f"])
    zero = {f(t) for t in range(min(b, f.d))}
    vs = set(vertices)
    return Coloring(2, [0 if x in zero else 1 for x in range(max(vs, default=-1) + 1)])


def thm7_decode(h: Hypergraph, c: Coloring, which: Optional[str] = None) -> set[int]:
    """Separating set: indices whose color is one of the colors used on the range of ``f``."""
    which = which or h.meta["gadget"].removeprefix("thm7-")
    _require(h, c, Mode.STRONG)
    f = Injection(h.meta["f"])
    code = h.label_index()
    if which == "strong3":
        window = h.meta["window"]
        used = {c(code[("u", y)]) for y in f.values if ("u", y) in code}
        return {j for j in range(window) if c(code[("u", j)]) in used}
    if which == "strong2":
        used = {c(code[("v", y)]) for y in f.values}
        return {n for n in range(h.window) if c(code[("v", n)]) in used}
    raise ValueError(f"unknown strong gadget {which!r}")
