"""Eventually repeating tails, its strong form, and the stable-Ramsey route to it.

All colorings here are total eventually periodic colorings of N (nonempty
period).  A color in the period occurs infinitely often; a color seen only
in the prefix occurs finitely often.

The pair coloring ``g(a, b)`` is 1 iff some color occurs exactly once in
``f`` restricted to the half-open interval ``[a, b)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import _kernels
from .colorings import Coloring, is_conflict_free
from .errors import WindowTooSmall
from .hypergraph import TailFrom


def _require_total(f: Coloring) -> None:
    if f.is_finite:
        raise ValueError("need a total coloring of N (nonempty period)")


def n_colors(f: Coloring) -> int:
    """Number of colors actually used by ``f``."""
    return len(set(f.prefix) | set(f.period))


def refutation_size(k: int) -> int:
    """Size of the block the halving argument needs for ``k`` colors."""
    if k < 1:
        raise ValueError("need at least one color")
    return 3 * 2 ** (k - 1)


def _tail_counts(f: Coloring, b: int) -> dict[int, float]:
    """Occurrences of each color at positions ``>= b``; period colors count as infinite."""
    counts: dict[int, float] = Counter(f.prefix[b:])
    for c in set(f.period):
        counts[c] = float("inf")
    return counts


def ert_holds(f: Coloring, b: int) -> bool:
    """Every position ``x >= b`` shares its color with another position ``>= b``."""
    _require_total(f)
    counts = _tail_counts(f, b)
    return all(n >= 2 for n in counts.values())


def ert_witness(f: Coloring) -> int:
    """Least ``b`` with :func:`ert_holds`; never more than the prefix length."""
    _require_total(f)
    for b in range(len(f.prefix) + 1):
        if ert_holds(f, b):
            return b
    raise AssertionError("unreachable: the periodic part always repeats")


def ect_witness(f: Coloring) -> int:
    """Least ``b`` past which every color is a period color."""
    _require_total(f)
    periodic = set(f.period)
    last = max((x for x, c in enumerate(f.prefix) if c not in periodic), default=-1)
    return last + 1


@dataclass(frozen=True)
class BridgeRow:
    b: int
    conflict_free: bool
    all_repeat: bool

    @property
    def agrees(self) -> bool:
        return self.conflict_free != self.all_repeat


@dataclass(frozen=True)
class BridgeReport:
    rows: tuple[BridgeRow, ...]
    witness: int

    @property
    def agrees(self) -> bool:
        return all(r.agrees for r in self.rows)

    def to_json(self) -> dict:
        return {
            "agrees": self.agrees,
            "ert_witness": self.witness,
            "rows": [
                {"b": r.b, "conflict_free": r.conflict_free, "all_repeat": r.all_repeat, "agrees": r.agrees}
                for r in self.rows
            ],
        }


def cf_ert_bridge(f: Coloring, window: int) -> BridgeReport:
    """For each ``b < window``: the tail edge ``E_b`` is conflict-free iff ``b`` fails the repeat property."""
    _require_total(f)
    rows = tuple(BridgeRow(b, is_conflict_free(f, TailFrom(b)), ert_holds(f, b)) for b in range(window))
    return BridgeReport(rows, ert_witness(f))


def srt_g(f: Coloring, a: int, b: int) -> int:
    if not a < b:
        raise ValueError(f"g is defined for a < b, got a={a}, b={b}")
    counts = Counter(f(x) for x in range(a, b))
    return 1 if any(n == 1 for n in counts.values()) else 0


@dataclass
class PairColoring:
    """``g`` for a fixed ``f`` with a cached table grown on demand."""

    f: Coloring
    _table: list = field(default_factory=list, repr=False)
    _n: int = field(default=0, repr=False)

    def table(self, n: int) -> list[list[int]]:
        """``g[a][b]`` for ``0 <= a < b <= n``."""
        if n > self._n:
            self._table = _kernels.g_table(self.f.values(n), max(self.f.k, 1))
            self._n = n
        return self._table

    def __call__(self, a: int, b: int) -> int:
        if not a < b:
            raise ValueError(f"g is defined for a < b, got a={a}, b={b}")
        if b > self._n:
            self.table(max(b, 2 * self._n))
        return self._table[a][b]


def stability_bound_check(f: Coloring, a: int, horizon: int) -> int:
    """Number of ``x`` in ``(a, horizon]`` with ``g(a, x) != g(a, x+1)``.

    Each color can make ``g(a, .)`` flip at most twice (first and second
    occurrence), so the count never exceeds twice the number of colors.
    """
    counts: Counter = Counter()
    ones = 0
    prev = None
    changes = 0
    for x in range(a, horizon + 1):
        c = f(x)
        counts[c] += 1
        if counts[c] == 1:
            ones += 1
        elif counts[c] == 2:
            ones -= 1
        cur = 1 if ones else 0  # g(a, x+1)
        if prev is not None and cur != prev:
            changes += 1
        prev = cur
    return changes


def _neighbourhoods(g: list[list[int]], window: int, color: int) -> list[int]:
    nbr = [0] * window
    for a in range(window):
        for b in range(a + 1, window):
            if g[a][b] == color:
                nbr[a] |= 1 << b
                nbr[b] |= 1 << a
    return nbr


def mono_set_search(f: Coloring, window: int, size: int, color: int, min_last: int = 0) -> Optional[list[int]]:
    """Lexicographically first ``size``-subset of ``[0, window)`` on which ``g`` is constantly ``color``.

    ``min_last`` additionally forces the largest element to be at least that.
    """
    if size < 2:
        raise ValueError("size must be at least 2")
    if color not in (0, 1):
        raise ValueError("g takes colors 0 and 1")
    g = PairColoring(f).table(window)
    return _kernels.first_clique(_neighbourhoods(g, window, color), window, size, min_last)


@dataclass(frozen=True)
class CounterExample:
    """``g(a, b) = 0`` for the extreme elements of the starting block."""

    a: int
    b: int

    @property
    def pair(self) -> tuple[int, int]:
        return (self.a, self.b)

    def to_json(self) -> dict:
        return {"kind": "counterexample", "pair": [self.a, self.b]}


@dataclass(frozen=True)
class HalvingChain:
    """Blocks ``H_0 > H_1 > ...``; ``excluded[m]`` is the (position, color) unique in ``H_m``'s span."""

    blocks: tuple[tuple[int, ...], ...]
    excluded: tuple[tuple[int, int], ...]
    pair: tuple[int, int]

    def to_json(self) -> dict:
        return {
            "kind": "chain",
            "blocks": [list(b) for b in self.blocks],
            "excluded": [{"position": p, "color": c} for p, c in self.excluded],
            "pair": list(self.pair),
        }


def _unique_position(f: Coloring, lo: int, hi: int) -> Optional[int]:
    counts = Counter(f(x) for x in range(lo, hi))
    for x in range(lo, hi):
        if counts[f(x)] == 1:
            return x
    return None


def halving_refute(f: Coloring, H0: Sequence[int], k: Optional[int] = None):
    """Find a pair in ``H0`` with ``g = 0``, halving as the stable-Ramsey argument does.

    ``k`` defaults to the number of colors ``f`` uses and must be at least
    that; ``H0`` must be increasing of size ``3 * 2**(k-1)``.  At each step
    the leftmost uniquely occurring position ``P`` in the block's span splits
    it; the left part is kept when it has at least half the elements, else
    the right part.  Neither part's span contains ``P``, so its color is gone
    for good.  Returns :class:`CounterExample` when the first block already
    has ``g = 0`` on its extremes, else a :class:`HalvingChain`.
    """
    _require_total(f)
    r = n_colors(f)
    if k is None:
        k = r
    if k < r:
        raise ValueError(f"f uses {r} colors, more than k={k}")
    H = tuple(int(x) for x in H0)
    if len(H) != refutation_size(k):
        raise ValueError(f"H0 must have {refutation_size(k)} elements, got {len(H)}")
    if any(a >= b for a, b in zip(H, H[1:])) or (H and H[0] < 0):
        raise ValueError("H0 must be strictly increasing naturals")
    blocks = [H]
    excluded = []
    while True:
        lo, hi = H[0], H[-1]
        P = _unique_position(f, lo, hi)
        if P is None:
            if len(blocks) == 1:
                return CounterExample(lo, hi)
            return HalvingChain(tuple(blocks), tuple(excluded), (lo, hi))
        if len(H) <= 3:
            raise AssertionError("more colors in the final block than k allows")
        i = max(j for j in range(len(H)) if H[j] <= P)
        half = len(H) // 2
        H = H[:half] if i + 1 >= half else H[-half:]
        blocks.append(H)
        excluded.append((P, f(P)))


def ert_via_srt(f: Coloring, window: int) -> int:
    """Bound from a ``g``-0-homogeneous set found in the window.

    Uses the least set of size ``3 * 2**(r-1)`` (``r`` colors used) whose last
    element reaches the periodic part.  Every position between two elements
    then has a repeated color inside that gap, and positions past the last
    element lie in the period, so the set's minimum satisfies the repeat
    property.
    """
    _require_total(f)
    size = refutation_size(max(n_colors(f), 1))
    if window < size:
        raise WindowTooSmall(f"window {window} holds no set of {size} elements")
    H = mono_set_search(f, window, size, 0, min_last=len(f.prefix))
    if H is None:
        raise WindowTooSmall(f"no g-0-homogeneous set of {size} elements ending at or after {len(f.prefix)} below {window}")
    return H[0]
