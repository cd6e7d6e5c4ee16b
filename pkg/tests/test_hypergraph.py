import pytest
from hypothesis import given, strategies as st

from hypercolor.errors import EdgeIndexError, EdgeNotContained, NonFiniteEdge, OutsideUniverse, RepresentationMismatch, Unbounded
from hypercolor.gadgets import matryoshka
from hypercolor.hypergraph import (
    CharFn,
    Finite,
    Hypergraph,
    PartialHypergraph,
    Repr,
    TailFrom,
    edge_contains,
    level_bounds,
    partial_hypergraph,
    partial_subhypergraph,
    restriction_level,
    seq_graph,
)


def test_edge_contains_examples():
    assert edge_contains(seq_graph([[1, 3]]), 0, 3)
    h = Hypergraph((TailFrom(5),), Repr.CHARFN)
    assert not edge_contains(h, 0, 4)
    h = Hypergraph((CharFn.from_set({2, 7}),), Repr.CHARFN)
    assert edge_contains(h, 0, 7)
    assert not edge_contains(h, 0, 3)


def test_edge_contains_bad_index():
    with pytest.raises(EdgeIndexError):
        edge_contains(seq_graph([[0]]), 1, 0)


def test_finite_edge_must_increase():
    with pytest.raises(ValueError):
        Finite((3, 1))
    assert Finite.of([3, 1, 3]).vertices == (1, 3)


def test_charfn_bound_invariant():
    with pytest.raises(ValueError):
        CharFn((0, 1, 1), 2)
    fn = CharFn((0, 1, 0, 0), 2)
    assert fn.extent() == (1,)
    assert not fn.contains(100)


def test_charfn_without_bound_is_pointwise_only():
    fn = CharFn((0, 1))
    assert fn.contains(1)
    with pytest.raises(Unbounded):
        fn.extent()


def test_repr_checks():
    with pytest.raises(RepresentationMismatch):
        Hypergraph((TailFrom(0),), Repr.SEQ)
    with pytest.raises(RepresentationMismatch):
        Hypergraph((Finite((0,)),), Repr.CHARFN)
    with pytest.raises(ValueError):
        seq_graph([[0, 1], [1, 0]], repr=Repr.SET)
    # sequences may repeat edges
    assert seq_graph([[0, 1], [1, 0]]).n_edges == 2


def test_window_containment():
    with pytest.raises(OutsideUniverse):
        seq_graph([[0, 5]], window=5)


def test_partial_hypergraph_examples():
    h = seq_graph([[0, 1], [1, 2]])
    assert partial_hypergraph(h, {0, 1}, {0}) == PartialHypergraph(frozenset({0, 1}), frozenset({0}))
    with pytest.raises(EdgeNotContained) as err:
        partial_hypergraph(h, {0, 1}, {1})
    assert err.value.index == 1
    with pytest.raises(NonFiniteEdge) as err:
        partial_hypergraph(matryoshka(3), {0, 1}, {0})
    assert err.value.index == 0


def test_partial_subhypergraph_matryoshka():
    ps = partial_subhypergraph(matryoshka(11), {3, 5, 9})
    got = {e.index: set(e.vertices) for e in ps.edges}
    assert got[0] == {3, 5, 9}
    assert got[4] == {5, 9}
    assert got[6] == {9}
    assert got[10] == set()
    assert ps.edges[10].empty


def test_partial_subhypergraph_small():
    ps = partial_subhypergraph(seq_graph([[0, 1]]), {0, 1})
    assert [(e.index, set(e.vertices)) for e in ps.edges] == [(0, {0, 1})]
    ps = partial_subhypergraph(seq_graph([[0, 1]]), {5})
    assert [(e.index, set(e.vertices)) for e in ps.edges] == [(0, set())]
    assert ps.edges[0].empty
    assert ps.nonempty().edges == ()


def test_restriction_level_examples():
    m, H = restriction_level(seq_graph([[1, 3]]), 1)
    assert m == 3 and H.vertices == frozenset(range(4)) and H.edge_indices == frozenset({0})
    m, H = restriction_level(seq_graph([[0]]), 0)
    assert m == 0 and H.vertices == frozenset({0}) and H.edge_indices == frozenset()
    m, _ = restriction_level(seq_graph([[1, 3], [2]]), 2)
    assert m == 4


edge_lists = st.lists(st.lists(st.integers(0, 12), min_size=0, max_size=4), min_size=0, max_size=6)


@given(edge_lists, st.sets(st.integers(0, 14), max_size=8))
def test_partial_subhypergraph_matches_brute_intersection(edges, vs):
    h = seq_graph(edges)
    ps = partial_subhypergraph(h, vs)
    assert [e.index for e in ps.edges] == list(range(len(edges)))
    for e in ps.edges:
        assert set(e.vertices) == set(edges[e.index]) & vs


@given(st.integers(0, 30), st.integers(0, 40))
def test_tailfrom_membership(j, k):
    h = Hypergraph((TailFrom(j),), Repr.CHARFN)
    assert edge_contains(h, 0, k) == (k >= j)


@given(edge_lists)
def test_level_bounds_monotone(edges):
    h = seq_graph(edges)
    ms = level_bounds(h, len(edges) + 3)
    assert ms[0] == 0
    assert all(a < b for a, b in zip(ms, ms[1:]))
    for n in range(1, len(ms)):
        assert all(v <= ms[n] for e in edges[:n] for v in e)
    for n in range(len(ms)):
        _, H = restriction_level(h, n)
        assert H.edge_indices == frozenset(range(min(n, len(edges))))


@given(edge_lists, st.sets(st.integers(0, 14), max_size=10))
def test_partial_hypergraph_is_partial_subhypergraph(edges, vs):
    h = seq_graph(edges)
    idxs = {i for i, e in enumerate(edges) if set(e) <= vs}
    ph = partial_hypergraph(h, vs, idxs)
    ps = partial_subhypergraph(h, vs)
    for i in ph.edge_indices:
        assert set(ps.edges[i].vertices) == set(edges[i])
