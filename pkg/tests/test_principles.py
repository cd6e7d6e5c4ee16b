import itertools

import pytest
from hypothesis import given, settings, strategies as st

from hypercolor.colorings import Coloring
from hypercolor.errors import WindowTooSmall
from hypercolor.principles import (
    CounterExample,
    HalvingChain,
    PairColoring,
    cf_ert_bridge,
    ect_witness,
    ert_holds,
    ert_via_srt,
    ert_witness,
    halving_refute,
    mono_set_search,
    n_colors,
    refutation_size,
    srt_g,
    stability_bound_check,
)

from conftest import brute_ert


def col(prefix, period, k=None):
    return Coloring(k or max(list(prefix) + list(period)) + 1, prefix, period)


def test_ert_examples():
    assert ert_witness(col([], [0])) == 0
    assert ert_witness(col([0, 1], [1])) == 1
    assert ert_witness(col([], [0, 1])) == 0


def test_ect_examples():
    assert ect_witness(col([2, 0], [0, 1])) == 1
    assert ect_witness(col([], [0])) == 0


def test_finite_coloring_rejected():
    with pytest.raises(ValueError):
        ert_witness(Coloring(2, (0, 1)))


def test_bridge_examples():
    rep = cf_ert_bridge(col([0, 1], [1]), 2)
    assert rep.rows[1].all_repeat and not rep.rows[1].conflict_free
    assert rep.rows[0].conflict_free and not rep.rows[0].all_repeat
    assert rep.witness == 1 and rep.agrees
    assert cf_ert_bridge(col([], [0]), 6).agrees


def test_srt_g_examples():
    f = col([], [0, 1])
    assert srt_g(f, 0, 3) == 1
    assert srt_g(col([], [0]), 4, 9) == 0
    assert all(srt_g(f, a, a + 1) == 1 for a in range(10))
    with pytest.raises(ValueError):
        srt_g(f, 3, 3)


def test_pair_coloring_cache_agrees():
    f = col([2, 0, 1], [0, 1, 1])
    g = PairColoring(f)
    for a, b in itertools.combinations(range(30), 2):
        assert g(a, b) == srt_g(f, a, b)


def test_stability_examples():
    assert stability_bound_check(col([], [0]), 0, 20) == 1
    assert stability_bound_check(col([], [0, 1]), 0, 40) <= 4


def test_mono_set_examples():
    H = mono_set_search(col([], [0]), 12, 4, 0)
    assert H == [0, 2, 4, 6]
    assert mono_set_search(col([1, 0, 2], [1]), 10, 2, 1) == [0, 1]
    assert mono_set_search(col([], [0, 1]), 12, 6, 1) is None
    with pytest.raises(ValueError):
        mono_set_search(col([], [0]), 12, 1, 0)


def test_mono_set_min_last():
    H = mono_set_search(col([], [0]), 12, 3, 0, min_last=9)
    assert H == [0, 2, 9]


def test_halving_examples():
    out = halving_refute(col([], [0]), [0, 1, 2])
    assert isinstance(out, CounterExample) and srt_g(col([], [0]), *out.pair) == 0
    with pytest.raises(ValueError):
        halving_refute(col([], [0, 1]), [0, 1, 2])
    with pytest.raises(ValueError):
        halving_refute(col([], [0, 1]), [0, 1, 2, 3, 5, 4])


def test_halving_runs_a_chain():
    # color 2 occurs once, at 0, so the right half is kept
    f = col([2, 0, 1, 0, 1], [0, 1], k=3)
    out = halving_refute(f, list(range(12)))
    assert isinstance(out, HalvingChain)
    assert [len(b) for b in out.blocks] == [12, 6]
    assert out.excluded == ((0, 2),) and out.pair == (6, 11)
    assert srt_g(f, *out.pair) == 0
    for (pos, color), block in zip(out.excluded, out.blocks[1:]):
        assert color not in {f(x) for x in range(block[0], block[-1])}


def test_ert_via_srt_examples():
    assert ert_holds(col([], [0]), ert_via_srt(col([], [0]), 12))
    b = ert_via_srt(col([0, 1], [1]), 20)
    assert b >= 1 and ert_holds(col([0, 1], [1]), b)
    with pytest.raises(WindowTooSmall):
        ert_via_srt(col([], [0, 1]), 2)


def test_refutation_size():
    assert [refutation_size(k) for k in (1, 2, 3)] == [3, 6, 12]


periodic = st.integers(1, 3).flatmap(
    lambda k: st.tuples(
        st.lists(st.integers(0, k - 1), max_size=6),
        st.lists(st.integers(0, k - 1), min_size=1, max_size=4),
        st.just(k),
    )
)


@given(periodic)
def test_ert_matches_windowed_brute_force(args):
    prefix, period, k = args
    f = Coloring(k, prefix, period)
    assert ert_witness(f) == brute_ert(prefix, period)
    assert ect_witness(f) >= ert_witness(f)


@given(periodic)
def test_bridge_always_agrees(args):
    prefix, period, k = args
    assert cf_ert_bridge(Coloring(k, prefix, period), 11).agrees


@given(periodic, st.integers(0, 10))
def test_stability_bound(args, a):
    prefix, period, k = args
    assert stability_bound_check(Coloring(k, prefix, period), a, 120) <= 2 * k


@given(periodic, st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_halving_always_refutes(args, rnd):
    prefix, period, k = args
    f = Coloring(k, prefix, period)
    size = refutation_size(k)
    H0 = sorted(rnd.sample(range(30), size))
    out = halving_refute(f, H0, k)
    a, b = out.pair
    assert a in H0 and b in H0 and a < b
    assert srt_g(f, a, b) == 0


@given(periodic)
@settings(max_examples=40, deadline=None)
def test_no_large_one_homogeneous_set(args):
    prefix, period, k = args
    f = Coloring(k, prefix, period)
    assert mono_set_search(f, 20, refutation_size(max(n_colors(f), 1)), 1) is None
