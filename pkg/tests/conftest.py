"""Independent brute-force oracles shared by the test modules.

Nothing here calls into the package's verifiers or search; the definitions
are restated directly so the tests compare two separate implementations.
"""

import itertools
from collections import Counter

import pytest

from hypercolor import _kernels


def edge_ok(colors, edge, mode):
    counts = Counter(colors[v] for v in edge)
    if mode == "proper":
        return len(edge) <= 1 or len(counts) >= 2
    if mode == "strong":
        return all(n == 1 for n in counts.values())
    return any(n == 1 for n in counts.values())


def brute_colorings(edges, n_vertices, k, mode):
    """Every coloring of ``0..n_vertices-1`` satisfying ``mode`` on every edge, lexicographic."""
    return [
        colors
        for colors in itertools.product(range(k), repeat=n_vertices)
        if all(edge_ok(colors, e, mode) for e in edges)
    ]


def brute_colorable(edges, n_vertices, k, mode):
    return any(
        all(edge_ok(colors, e, mode) for e in edges)
        for colors in itertools.product(range(k), repeat=n_vertices)
    )


def brute_tail_counts(prefix, period, b, horizon):
    """Color counts on ``[b, horizon)`` of ``prefix + period*``."""
    seq = [prefix[x] if x < len(prefix) else period[(x - len(prefix)) % len(period)] for x in range(horizon)]
    return Counter(seq[b:]), seq


def brute_ert(prefix, period):
    """Least ``b`` with the repeat property, scanning a window of ``|prefix| + 2|period|``."""
    W = len(prefix) + 2 * len(period)
    _, seq = brute_tail_counts(prefix, period, 0, W)
    for b in range(W):
        if all(any(y != x and seq[y] == seq[x] for y in range(b, W)) for x in range(b, W)):
            return b
    return W


KERNELS = [
    pytest.param(_kernels.py_impl, id="python"),
    pytest.param(
        _kernels.c_impl,
        id="cython",
        marks=pytest.mark.skipif(_kernels.c_impl is None, reason="compiled kernels not built"),
    ),
]


def np_proper_2colorings(edges, n_vertices):
    """All proper 2-colorings of ``0..n-1`` as rows of a 0/1 array (numpy brute force)."""
    import numpy as np

    idx = np.arange(2 ** n_vertices, dtype=np.int64)
    bits = (idx[:, None] >> np.arange(n_vertices)[None, :]) & 1
    ok = np.ones(len(idx), dtype=bool)
    for e in edges:
        if len(e) <= 1:
            continue
        cols = bits[:, list(e)]
        ok &= cols.min(axis=1) != cols.max(axis=1)
    return bits[ok]


def ordered_trees(max_nodes):
    """Every ordered rooted tree with 1..max_nodes nodes, as prefix-closed node sets.

    Children of a node are ``0..m-1``; each tree is produced exactly once.
    """
    def grow(n):
        # forests of ordered trees with n nodes total, rooted at children 0,1,...
        if n == 0:
            yield ()
            return
        for first in range(1, n + 1):
            for head in trees(first):
                for rest in grow(n - first):
                    yield (head,) + rest

    def trees(n):
        for kids in grow(n - 1):
            yield kids

    def nodes(kids, prefix=()):
        out = {prefix}
        for i, sub in enumerate(kids):
            out |= nodes(sub, prefix + (i,))
        return out

    for n in range(1, max_nodes + 1):
        for t in trees(n):
            yield frozenset(nodes(t))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
