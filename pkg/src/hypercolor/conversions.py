"""Moving between edge representations.

Sets of codes become sequences, and sequences become characteristic
functions, by direct construction.  The other two directions (sequence to
set, characteristic function to code) are not computable in general, so
they are offered only against an explicit search bound or stored support
bound.

Finite edges are coded by the bitmask ``sum(2**v for v in edge)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .errors import MissingBound
from .hypergraph import CharFn, Finite, Hypergraph, Repr


def encode_edge(vertices: Iterable[int]) -> int:
    code = 0
    for v in set(vertices):
        code |= 1 << v
    return code


def decode_edge(code: int) -> frozenset[int]:
    out = set()
    v = 0
    while code:
        if code & 1:
            out.add(v)
        code >>= 1
        v += 1
    return frozenset(out)


def set_to_seq(codes: Iterable[int], e0: int, window: int) -> list[int]:
    """Materialize ``n -> n if n in codes else e0`` over ``0..window-1``; its range is ``codes``."""
    E = set(codes)
    if e0 not in E:
        raise ValueError(f"default code {e0} is not one of the edges")
    if any(c >= window or c < 0 for c in E):
        raise ValueError("every edge code must lie inside the code window")
    return [n if n in E else e0 for n in range(window)]


def seq_range(seq: Iterable[int]) -> set[int]:
    return set(seq)


def seq_to_charfns(seq: Iterable[Iterable[int]]) -> list[CharFn]:
    return [CharFn.from_set(e) for e in seq]


@dataclass(frozen=True)
class Yes:
    index: int

    def to_json(self) -> dict:
        return {"status": "yes", "index": self.index}


@dataclass(frozen=True)
class NoWithinBound:
    bound: int

    def to_json(self) -> dict:
        return {"status": "no_within_bound", "bound": self.bound}


BoundedAnswer = Union[Yes, NoWithinBound]


def seq_to_set_bounded(seq: Sequence[Iterable[int]], e: Iterable[int], bound: int) -> BoundedAnswer:
    """Is ``e`` among the first ``bound`` terms of ``seq``?"""
    if bound > len(seq):
        raise ValueError(f"bound {bound} exceeds sequence length {len(seq)}")
    target = frozenset(e)
    for i in range(bound):
        if frozenset(seq[i]) == target:
            return Yes(i)
    return NoWithinBound(bound)


def seq_to_set(seq: Iterable[Iterable[int]]) -> set[frozenset[int]]:
    """The edge set of a finite sequence."""
    return {frozenset(e) for e in seq}


def charfns_to_codes(fns: Sequence[CharFn], bounds: Optional[Sequence[Optional[int]]] = None) -> list[frozenset[int]]:
    """``s_i = {j < bound_i : fn_i(j) = 1}``; a missing bound is an error, not a guess."""
    out = []
    for i, fn in enumerate(fns):
        b = bounds[i] if bounds is not None and bounds[i] is not None else fn.bound
        if b is None:
            raise MissingBound(i)
        out.append(frozenset(j for j in range(b) if fn.contains(j)))
    return out


def bounded_to_seq(h: Hypergraph) -> Hypergraph:
    """A characteristic-function graph whose edges all carry bounds, as a sequence of codes.

    Labels and metadata are kept, so gadget decoders accept the result.
    """
    if h.repr is not Repr.CHARFN:
        return h
    codes = charfns_to_codes(h.edges)
    return Hypergraph(tuple(Finite.of(c) for c in codes), Repr.SEQ, h.window, h.labels, h.meta)
