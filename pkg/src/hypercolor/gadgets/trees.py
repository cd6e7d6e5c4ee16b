"""Trees in N^<N, the tree-to-hypergraph gadget, and the leaf-exposing transform.

A :class:`TreeSpec` is a finite prefix-closed node set plus finitely many
designated infinite branches, each a stored stem continued forever by the
constant ``fill`` (0 unless produced by :func:`leaf_transform`).  Trees
without designated branches are well-founded.

Gadget vertices are coded ``a_0, a_1, b_0, b_1, s = 0..4`` followed by
``sigma_0, sigma_1`` for each nonempty node in (length, lexicographic)
order.  Red is color 1 and blue is color 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from ..colorings import Coloring, Mode, verify
from ..errors import ExtractionStuck, ImproperColoring
from ..hypergraph import Finite, Hypergraph, Repr

Node = tuple[int, ...]

BLUE, RED = 0, 1
A0, A1, B0, B1, S = range(5)


def _prefixes(seq: Node):
    return (seq[:i] for i in range(len(seq) + 1))


@dataclass(frozen=True)
class TreeSpec:
    nodes: frozenset[Node]
    branches: frozenset[Node] = frozenset()
    fill: int = 0

    def __post_init__(self):
        nodes = frozenset(tuple(int(x) for x in n) for n in self.nodes)
        branches = frozenset(tuple(int(x) for x in b) for b in self.branches)
        for n in nodes:
            if any(x < 0 for x in n):
                raise ValueError("tree entries must be natural")
            if n and n[:-1] not in nodes:
                raise ValueError(f"node set is not prefix-closed at {n}")
        for b in branches:
            if b not in nodes:
                raise ValueError(f"branch stem {b} is not a node")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "branches", branches)

    @classmethod
    def build(cls, nodes: Iterable[Iterable[int]], branches: Iterable[Iterable[int]] = (), fill: int = 0) -> "TreeSpec":
        """Close ``nodes`` and branch stems under prefixes (the root included)."""
        closed = set()
        stems = [tuple(b) for b in branches]
        for n in [tuple(x) for x in nodes] + stems:
            closed.update(_prefixes(n))
        return cls(frozenset(closed), frozenset(stems), fill)

    def on_branch(self, sigma: Node) -> bool:
        """Is ``sigma`` an initial segment of some designated infinite path?"""
        for b in self.branches:
            if len(sigma) <= len(b):
                if sigma == b[: len(sigma)]:
                    return True
            elif sigma[: len(b)] == b and all(x == self.fill for x in sigma[len(b):]):
                return True
        return False

    def __contains__(self, sigma) -> bool:
        return tuple(sigma) in self.nodes or self.on_branch(tuple(sigma))

    def nodes_to_depth(self, depth: int) -> list[Node]:
        """Every node of length at most ``depth``, branch continuations included, sorted."""
        out = {n for n in self.nodes if len(n) <= depth}
        for b in self.branches:
            for extra in range(depth - len(b) + 1):
                out.add(b + (self.fill,) * extra)
        return sorted(out, key=lambda n: (len(n), n))

    def children(self, sigma: Node, depth: Optional[int] = None) -> list[Node]:
        kids = {n for n in self.nodes if len(n) == len(sigma) + 1 and n[:-1] == sigma}
        if self.on_branch(sigma):
            for b in self.branches:
                if len(sigma) >= len(b) and sigma[: len(b)] == b and all(x == self.fill for x in sigma[len(b):]):
                    kids.add(sigma + (self.fill,))
        if depth is not None:
            kids = {k for k in kids if len(k) <= depth}
        return sorted(kids)

    def is_leaf(self, sigma: Node) -> bool:
        return sigma in self and not self.children(sigma)

    def leaves(self) -> set[Node]:
        """Leaves among the stored nodes (nodes on a designated branch never are)."""
        return {n for n in self.nodes if self.is_leaf(n)}

    def branch_path(self, stem: Node, length: int) -> Node:
        if stem not in self.branches:
            raise ValueError(f"{stem} is not a designated branch")
        return (stem + (self.fill,) * max(0, length - len(stem)))[:length]

    def max_length(self) -> int:
        return max((len(n) for n in self.nodes), default=0)

    def default_depth(self) -> int:
        return self.max_length() + (1 if self.branches else 0)


def tree_leaves_brute(nodes: Iterable[Node]) -> set[Node]:
    """Leaves of a finite node set straight from the definition."""
    ns = set(nodes)
    return {s for s in ns if not any(len(t) == len(s) + 1 and t[:-1] == s for t in ns)}


def _codes(T: TreeSpec, depth: int) -> tuple[list[Node], dict[Node, int]]:
    sigmas = [n for n in T.nodes_to_depth(depth) if n]
    return sigmas, {s: 5 + 2 * i for i, s in enumerate(sigmas)}


def tree_gadget(T: TreeSpec, depth: Optional[int] = None) -> Hypergraph:
    """Gadget of ``T`` cut to nodes of length at most ``depth``.

    Edges, in order: ``(a_0,a_1), (a_1,s), (b_0,b_1), (b_1,s)``; for each
    nonempty node ``sigma``: ``(sigma_0, sigma_1)`` then ``(sigma_1, s)`` if
    ``sigma`` is a leaf, else ``E_sigma = {sigma_1} + {tau_0 : tau a child}``;
    last ``E_0 = {a_0, b_0} + {sigma_0 : |sigma| = 1}``.  Children beyond
    ``depth`` are cut away, so the result is the partial subhypergraph of the
    full gadget on the retained vertices.
    """
    if depth is None:
        depth = T.default_depth()
    sigmas, zero = _codes(T, depth)
    edges = [(A0, A1), (A1, S), (B0, B1), (B1, S)]
    for s in sigmas:
        s0 = zero[s]
        edges.append((s0, s0 + 1))
        if T.is_leaf(s):
            edges.append((s0 + 1, S))
        else:
            edges.append((s0 + 1, *(zero[t] for t in T.children(s, depth))))
    edges.append((A0, B0, *(zero[s] for s in sigmas if len(s) == 1)))
    labels = [("a", 0), ("a", 1), ("b", 0), ("b", 1), ("s",)]
    for s in sigmas:
        labels += [("node", s, 0), ("node", s, 1)]
    meta = {
        "gadget": "tree",
        "nodes": tuple(sorted(T.nodes, key=lambda n: (len(n), n))),
        "branches": tuple(sorted(T.branches)),
        "fill": T.fill,
        "depth": depth,
    }
    return Hypergraph(tuple(Finite.of(e) for e in edges), Repr.SEQ, 5 + 2 * len(sigmas), tuple(labels), meta)


def tree_from_meta(h: Hypergraph) -> TreeSpec:
    m = h.meta
    return TreeSpec(frozenset(map(tuple, m["nodes"])), frozenset(map(tuple, m["branches"])), m.get("fill", 0))


def path_to_coloring(T: TreeSpec, stem: Node, depth: Optional[int] = None) -> Coloring:
    """Coloring of the depth-``depth`` gadget induced by the infinite branch through ``stem``.

    ``s, a_0, b_0`` blue and ``a_1, b_1`` red; on the path ``sigma_0`` red and
    ``sigma_1`` blue; off it ``tau_0`` blue and ``tau_1`` red.
    """
    if stem not in T.branches:
        raise ValueError(f"{stem} is not a designated branch")
    if depth is None:
        depth = T.default_depth()
    sigmas, _ = _codes(T, depth)
    colors = [BLUE, RED, BLUE, RED, BLUE]
    for s in sigmas:
        on_path = s == T.branch_path(stem, len(s))
        colors += [RED, BLUE] if on_path else [BLUE, RED]
    return Coloring(2, colors)


def coloring_to_path(T: TreeSpec, c: Coloring, depth: Optional[int] = None) -> list[Node]:
    """Follow red ``sigma_0`` vertices from ``E_0`` down to length ``depth``.

    The coloring must be proper on ``tree_gadget(T, depth)``; colors are
    swapped first if ``s`` is red.  At each step the least red child is taken.
    """
    if depth is None:
        depth = T.default_depth()
    h = tree_gadget(T, depth)
    rep = verify(h, c, Mode.PROPER)
    if not rep.ok:
        raise ImproperColoring(Mode.PROPER.value, rep.failing_edge)
    if c(S) == RED:
        c = c.swapped()
    _, zero = _codes(T, depth)
    chain: list[Node] = []
    sigma: Node = ()
    while len(sigma) < depth:
        kids = T.children(sigma, depth)
        red = [t for t in kids if c(zero[t]) == RED]
        if not red:
            raise ExtractionStuck(sigma)
        sigma = red[0]
        chain.append(sigma)
    return chain


def _shift(seq: Node, by: int) -> Node:
    return tuple(x + by for x in seq)


def leaf_transform(T: TreeSpec) -> tuple[TreeSpec, set[Node]]:
    """Shift every entry up by one and hang a 0 below every node.

    The result's nodes are ``sigma+1`` and ``(sigma+1)^0`` for ``sigma`` in
    ``T``; its leaves are exactly the latter, and its infinite paths are the
    shifted paths of ``T``.  Returns the new tree and its declared leaf set.
    """
    shifted = {_shift(s, 1) for s in T.nodes}
    hung = {s + (0,) for s in shifted}
    branches = frozenset(_shift(b, 1) for b in T.branches)
    That = TreeSpec(frozenset(shifted | hung), branches, T.fill + 1)
    return That, hung
