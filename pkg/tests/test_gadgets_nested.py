import pytest
from hypothesis import given, settings, strategies as st

from hypercolor.colorings import Coloring, Mode, verify
from hypercolor.gadgets import TreeSpec, k_extension, matryoshka, matryoshka_local_coloring, tree_gadget
from hypercolor.hypergraph import TailFrom, partial_subhypergraph, seq_graph
from hypercolor.solver import Uncolorable, solve

from conftest import brute_colorable, ordered_trees


def test_matryoshka_edges():
    assert matryoshka(3).edges == (TailFrom(0), TailFrom(1), TailFrom(2))
    assert matryoshka(0).n_edges == 0


@given(st.sets(st.integers(0, 30), max_size=10))
def test_matryoshka_local_coloring_is_conflict_free(vs):
    G = partial_subhypergraph(matryoshka(32), vs).nonempty()
    c = matryoshka_local_coloring(vs)
    assert verify(G.to_hypergraph(), c, Mode.CONFLICT_FREE).ok


@given(
    st.lists(st.integers(0, 3), max_size=6),
    st.lists(st.integers(0, 3), min_size=1, max_size=4),
)
def test_matryoshka_rejects_every_periodic_coloring(prefix, period):
    rep = verify(matryoshka(len(prefix) + 1), Coloring(4, prefix, period), Mode.CONFLICT_FREE)
    assert not rep.ok


def test_k_extension_examples():
    h = seq_graph([[0, 1]], window=2)
    assert k_extension(h, 2) is h
    h3 = k_extension(h, 3)
    assert h3.finite_edges() == [(0, 1), (0, 2), (1, 2)]
    assert h3.window == 3
    with pytest.raises(ValueError):
        k_extension(h, 1)


def test_k_extension_keeps_labels():
    h = tree_gadget(TreeSpec.build([[0]]))
    h4 = k_extension(h, 4)
    assert h4.labels[-2:] == (("w", 0), ("w", 1))
    assert h4.finite_edges()[h.n_edges] == (7, 8)


small_graphs = st.lists(st.sets(st.integers(0, 5), min_size=1, max_size=3), min_size=1, max_size=5)


@given(small_graphs, st.sampled_from([3, 4]))
@settings(max_examples=80, deadline=None)
def test_k_extension_preserves_uncolorability(edges, k):
    h = seq_graph([sorted(e) for e in edges], window=6)
    base = isinstance(solve(h, 2, Mode.PROPER), Uncolorable)
    ext = isinstance(solve(k_extension(h, k), k, Mode.PROPER), Uncolorable)
    assert base == ext == (not brute_colorable([sorted(e) for e in edges], 6, 2, "proper"))


@pytest.mark.parametrize("nodes", list(ordered_trees(3)), ids=str)
def test_k_extension_of_well_founded_tree(nodes):
    h = k_extension(tree_gadget(TreeSpec(nodes)), 3)
    assert isinstance(solve(h, 3, Mode.PROPER), Uncolorable)
    comb = k_extension(tree_gadget(TreeSpec(nodes, frozenset({()})), 3), 3)
    assert not isinstance(solve(comb, 3, Mode.PROPER), Uncolorable)
