"""The nested-tails graph and the complete-graph extension from 2 to k colors."""

from __future__ import annotations

from typing import Iterable, Optional

from ..colorings import Coloring
from ..hypergraph import Finite, Hypergraph, Repr, TailFrom

BLUE, RED = 0, 1


def matryoshka(window: int) -> Hypergraph:
    """Edges ``E_j = {k : k >= j}`` for ``j < window`` over all of N."""
    if window < 0:
        raise ValueError("window must be natural")
    return Hypergraph(tuple(TailFrom(j) for j in range(window)), Repr.CHARFN, None, meta={"gadget": "matryoshka"})


def matryoshka_local_coloring(vs: Iterable[int]) -> Coloring:
    """Largest vertex of ``vs`` red, every other vertex blue.

    Each nonempty ``E_j`` cut down to ``vs`` contains ``max(vs)``, so the
    single red vertex is unique in it.
    """
    vs = sorted(set(vs))
    if not vs:
        return Coloring(2, ())
    colors = [BLUE] * (vs[-1] + 1)
    colors[vs[-1]] = RED
    return Coloring(2, colors)


def k_extension(h: Hypergraph, k: int, n_vertices: Optional[int] = None) -> Hypergraph:
    """Add ``k-2`` fresh vertices forming a complete graph, each joined to every old vertex.

    Old vertices are ``0..n_vertices-1`` (default: the window, else one past
    the largest vertex of any edge).  Fresh vertices follow them.
    """
    if k < 2:
        raise ValueError("k_extension needs k >= 2")
    if k == 2:
        return h
    if n_vertices is None:
        if h.window is not None:
            n_vertices = h.window
        else:
            n_vertices = 1 + max((v for e in h.finite_edges() for v in e), default=-1)
    fresh = [n_vertices + i for i in range(k - 2)]
    added = [(a, b) for i, a in enumerate(fresh) for b in fresh[i + 1:]]
    added += [(v, w) for w in fresh for v in range(n_vertices)]
    labels = None
    if h.labels is not None:
        labels = tuple(h.labels) + tuple(("w", i) for i in range(k - 2))
    meta = dict(h.meta or {})
    meta["extension"] = k
    edges = h.edges + tuple(Finite(e) for e in added)
    return Hypergraph(edges, h.repr, n_vertices + k - 2, labels, meta)
