import math

import pytest
from hypothesis import given, strategies as st

from hypercolor.colorings import (
    Coloring,
    Mode,
    color_at,
    edge_profile,
    is_conflict_free,
    is_proper,
    is_strong,
    verify,
)
from hypercolor.errors import OutOfDomain, Unbounded
from hypercolor.gadgets import matryoshka
from hypercolor.hypergraph import CharFn, Finite, Hypergraph, Repr, TailFrom, restriction_level, seq_graph

from conftest import edge_ok


def fin(*colors):
    return Coloring.finite(colors, k=max(colors, default=0) + 1)


def test_color_at_examples():
    assert color_at(Coloring(2, (0, 1), (1,)), 5) == 1
    assert color_at(Coloring(3, (2,)), 0) == 2
    with pytest.raises(OutOfDomain):
        color_at(Coloring(3, (2,)), 1)


def test_colors_below_k():
    with pytest.raises(ValueError):
        Coloring(2, (0, 2))


def test_edge_profile_examples():
    assert edge_profile(fin(0, 1, 0), Finite((0, 1, 2))) == {0: 2, 1: 1}
    assert edge_profile(Coloring(2, (0, 1), (1,)), TailFrom(0)) == {0: 1, 1: math.inf}
    assert edge_profile(Coloring(1, (), (0,)), TailFrom(7)) == {0: math.inf}
    with pytest.raises(Unbounded):
        edge_profile(fin(0, 1), CharFn((0, 1)))


def test_proper_examples():
    assert not is_proper(fin(0, 0), Finite((0, 1)))
    assert is_proper(fin(0), Finite((0,)))
    assert is_proper(Coloring(2, (), (0, 1)), TailFrom(3))


def test_strong_examples():
    assert is_strong(fin(0, 1, 2), Finite((0, 1, 2)))
    assert not is_strong(fin(0, 1, 0), Finite((0, 2)))
    for j in range(5):
        assert not is_strong(Coloring(2, (1,), (0, 1)), TailFrom(j))


def test_conflict_free_examples():
    assert is_conflict_free(fin(0, 1, 1), Finite((0, 1, 2)))
    assert not is_conflict_free(fin(0, 0, 1, 1), Finite((0, 1, 2, 3)))
    for j in range(10):
        assert not is_conflict_free(Coloring(1, (), (0,)), TailFrom(j))


def test_empty_edge_conventions():
    c = fin(0)
    e = Finite(())
    assert is_proper(c, e) and is_strong(c, e) and not is_conflict_free(c, e)


def test_verify_examples():
    assert verify(seq_graph([[0, 1], [1, 2]]), fin(0, 1, 0), Mode.PROPER).ok
    assert verify(seq_graph([[0, 1]]), fin(0, 0), Mode.STRONG).failing_edge == 0


def test_verify_unbounded_reports_index():
    h = Hypergraph((CharFn.from_set({0, 1}), CharFn((0, 1))), Repr.CHARFN)
    with pytest.raises(Unbounded) as err:
        verify(h, Coloring(2, (0, 1, 0)), Mode.STRONG)
    assert err.value.index == 1


@given(
    st.lists(st.integers(0, 2), max_size=5),
    st.lists(st.integers(0, 2), min_size=1, max_size=4),
)
def test_matryoshka_never_conflict_free(prefix, period):
    c = Coloring(3, prefix, period)
    rep = verify(matryoshka(len(prefix) + 2), c, Mode.CONFLICT_FREE)
    assert not rep.ok
    # every tail starting in the period fails; the first failure is no later than that
    assert rep.failing_edge <= len(prefix)


colorings3 = st.lists(st.integers(0, 2), min_size=1, max_size=7)


@given(st.lists(st.integers(0, 2), min_size=2, max_size=7), st.data())
def test_mode_hierarchy(colors, data):
    e = sorted(data.draw(st.sets(st.integers(0, len(colors) - 1), min_size=2)))
    c = Coloring(3, colors)
    edge = Finite(tuple(e))
    if is_strong(c, edge):
        assert is_conflict_free(c, edge)
    if is_conflict_free(c, edge):
        assert is_proper(c, edge)
    if len(e) == 2:
        assert is_proper(c, edge) == is_conflict_free(c, edge) == is_strong(c, edge)
    if len(e) <= 3:
        assert is_proper(c, edge) == is_conflict_free(c, edge)


@given(colorings3, st.data())
def test_profile_and_tests_match_brute_tally(colors, data):
    e = sorted(data.draw(st.sets(st.integers(0, len(colors) - 1))))
    c = Coloring(3, colors)
    prof = edge_profile(c, Finite(tuple(e)))
    tally = {}
    for v in e:
        tally[colors[v]] = tally.get(colors[v], 0) + 1
    assert prof == tally
    for mode, fn in (("proper", is_proper), ("strong", is_strong), ("conflict_free", is_conflict_free)):
        assert fn(c, Finite(tuple(e))) == edge_ok(colors, e, mode)


@given(
    st.lists(st.lists(st.integers(0, 6), min_size=1, max_size=3), min_size=1, max_size=4),
    st.lists(st.integers(0, 2), min_size=12, max_size=12),
    st.sampled_from(list(Mode)),
)
def test_restriction_stability(edges, colors, mode):
    h = seq_graph(edges)
    for n in range(len(edges)):
        m1, H1 = restriction_level(h, n + 1)
        m0, H0 = restriction_level(h, n)
        c1 = Coloring(3, colors[: m1 + 1])
        if verify(H1.to_hypergraph(h), c1, mode).ok:
            assert verify(H0.to_hypergraph(h), Coloring(3, colors[: m0 + 1]), mode).ok
