"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each workload runs on both backends; results are checked equal before timing.
"""

import argparse
import random
import timeit

from hypercolor import _kernels
from hypercolor.colorings import Coloring, Mode
from hypercolor.gadgets import TreeSpec, tree_gadget
from hypercolor.hypergraph import seq_graph
from hypercolor.principles import PairColoring, _neighbourhoods
from hypercolor.solver import _MODE_CODE, _plan


def _search_args(h, k, mode, limit):
    plan = _plan(h, mode, len(h.edges))
    return (plan.npos, k, _MODE_CODE[mode], plan.pos_ptr, plan.chk_ptr, plan.verts, limit)


def _random_graph(n, p, seed):
    rng = random.Random(seed)
    nbr = [0] * n
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < p:
                nbr[a] |= 1 << b
                nbr[b] |= 1 << a
    return nbr


def workloads():
    path = seq_graph([[i, i + 1] for i in range(13)], window=14)
    yield "search: all proper 3-colorings of a 14-vertex path", "search", _search_args(path, 3, Mode.PROPER, 0)
    tree = tree_gadget(TreeSpec.build([(0, 0, 0), (1, 0), (2,)]))
    yield "search: uncolorable tree gadget", "search", _search_args(tree, 2, Mode.PROPER, 1)
    cf = seq_graph([list(range(i, i + 4)) for i in range(0, 12, 2)], window=16)
    yield "search: conflict-free 2-colorings, overlapping 4-sets", "search", _search_args(cf, 2, Mode.CONFLICT_FREE, 0)

    f = Coloring(3, (0, 1), (0, 1, 2))
    g = PairColoring(f).table(24)
    yield "first_clique: no 0-set of 12 in window 24", "first_clique", (_neighbourhoods(g, 24, 0), 24, 12, 2)
    yield "first_clique: no 9-clique in a random 60-vertex graph", "first_clique", (_random_graph(60, 0.5, 7), 60, 9, 0)

    yield "g_table: 400 values, 3 colors", "g_table", (Coloring(3, (2, 0), (0, 1, 1, 2)).values(400), 3)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if _kernels.c_impl is None:
        print("compiled kernels not built; only the Python timings are shown")
    print(f"{'workload':<56} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for title, name, call_args in workloads():
        py = getattr(_kernels.py_impl, name)
        row = [timeit.timeit(lambda: py(*call_args), number=args.repeat) / args.repeat * 1e3]
        if _kernels.c_impl is not None:
            c = getattr(_kernels.c_impl, name)
            assert py(*call_args) == c(*call_args), title
            row.append(timeit.timeit(lambda: c(*call_args), number=args.repeat) / args.repeat * 1e3)
            print(f"{title:<56} {row[0]:>10.2f} {row[1]:>10.2f} {row[0] / row[1]:>7.1f}x")
        else:
            print(f"{title:<56} {row[0]:>10.2f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
