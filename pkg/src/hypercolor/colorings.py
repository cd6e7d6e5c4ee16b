"""Finite and eventually periodic colorings, and the three per-edge tests."""

from __future__ import annotations

import enum
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import OutOfDomain, Unbounded
from .hypergraph import CharFn, Edge, Hypergraph, TailFrom

INF = math.inf


class Mode(str, enum.Enum):
    PROPER = "proper"
    STRONG = "strong"
    CONFLICT_FREE = "conflict_free"


@dataclass(frozen=True)
class Coloring:
    """``prefix`` followed by ``period`` repeated forever.

    An empty period makes the coloring finite with domain ``{0..len(prefix)-1}``.
    """

    k: int
    prefix: tuple[int, ...] = ()
    period: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(int(c) for c in self.prefix))
        object.__setattr__(self, "period", tuple(int(c) for c in self.period))
        if self.k < 0:
            raise ValueError("number of colors must be natural")
        for c in self.prefix + self.period:
            if not 0 <= c < self.k:
                raise ValueError(f"color {c} outside 0..{self.k - 1}")

    @classmethod
    def finite(cls, colors: Sequence[int], k: Optional[int] = None) -> "Coloring":
        colors = tuple(colors)
        if k is None:
            k = max(colors, default=-1) + 1
        return cls(k, colors, ())

    @property
    def is_finite(self) -> bool:
        return not self.period

    @property
    def domain_size(self) -> Optional[int]:
        return len(self.prefix) if self.is_finite else None

    def __call__(self, v: int) -> int:
        return color_at(self, v)

    def values(self, n: int) -> list[int]:
        """Colors of vertices ``0..n-1``."""
        return [color_at(self, v) for v in range(n)]

    def swapped(self, a: int = 0, b: int = 1) -> "Coloring":
        perm = {a: b, b: a}
        return Coloring(self.k, [perm.get(c, c) for c in self.prefix], [perm.get(c, c) for c in self.period])


def color_at(c: Coloring, v: int) -> int:
    if v < 0:
        raise OutOfDomain(v, c.domain_size)
    if v < len(c.prefix):
        return c.prefix[v]
    if not c.period:
        raise OutOfDomain(v, len(c.prefix))
    return c.period[(v - len(c.prefix)) % len(c.period)]


def edge_profile(c: Coloring, e: Edge) -> dict[int, float]:
    """Occurrences of each color inside edge ``e``; ``INF`` for infinitely many.

    Colors that do not occur are omitted.
    """
    if isinstance(e, TailFrom):
        if c.is_finite:
            # the tail leaves the finite domain
            raise OutOfDomain(max(e.start, len(c.prefix)), len(c.prefix))
        counts: dict[int, float] = Counter(c.prefix[e.start:])
        for col in set(c.period):
            counts[col] = INF
        return dict(counts)
    if isinstance(e, CharFn) and e.bound is None:
        raise Unbounded()
    return dict(Counter(color_at(c, v) for v in e.extent()))


def _size(profile: dict[int, float]) -> float:
    return sum(profile.values())


def proper_profile(profile: dict[int, float]) -> bool:
    return _size(profile) <= 1 or len(profile) >= 2


def strong_profile(profile: dict[int, float]) -> bool:
    return all(n == 1 for n in profile.values())


def conflict_free_profile(profile: dict[int, float]) -> bool:
    return any(n == 1 for n in profile.values())


_TESTS = {
    Mode.PROPER: proper_profile,
    Mode.STRONG: strong_profile,
    Mode.CONFLICT_FREE: conflict_free_profile,
}


def is_proper(c: Coloring, e: Edge) -> bool:
    return proper_profile(edge_profile(c, e))


def is_strong(c: Coloring, e: Edge) -> bool:
    return strong_profile(edge_profile(c, e))


def is_conflict_free(c: Coloring, e: Edge) -> bool:
    return conflict_free_profile(edge_profile(c, e))


def satisfies(c: Coloring, e: Edge, mode: Mode) -> bool:
    return _TESTS[Mode(mode)](edge_profile(c, e))


@dataclass(frozen=True)
class VerifyReport:
    mode: Mode
    failing_edge: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.failing_edge is None

    def to_json(self) -> dict:
        if self.ok:
            return {"status": "ok", "mode": self.mode.value}
        return {"status": "failing_edge", "mode": self.mode.value, "edge": self.failing_edge}


def verify(h: Hypergraph, c: Coloring, mode: Mode) -> VerifyReport:
    """First edge (in list order) on which ``c`` fails ``mode``, if any."""
    mode = Mode(mode)
    test = _TESTS[mode]
    for i, e in enumerate(h.edges):
        try:
            profile = edge_profile(c, e)
        except Unbounded:
            raise Unbounded(i) from None
        if not test(profile):
            return VerifyReport(mode, i)
    return VerifyReport(mode)


def verify_sets(edges: Iterable[Iterable[int]], colors: Sequence[int], mode: Mode) -> Optional[int]:
    """Same test on plain vertex sets against a list of colors; returns the first failing index."""
    test = _TESTS[Mode(mode)]
    for i, e in enumerate(edges):
        if not test(dict(Counter(colors[v] for v in e))):
            return i
    return None
