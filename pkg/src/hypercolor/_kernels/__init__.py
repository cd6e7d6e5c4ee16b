"""Hot loops: backtracking search, clique search, interval-uniqueness table.

The compiled extension is used when it was built; otherwise the pure-Python
module with identical signatures.  Set ``HYPERCOLOR_PURE_PYTHON=1`` to force
the fallback.
"""

import os

from . import _pykernels as py_impl

try:
    from . import _ckernels as c_impl
except ImportError:  # extension not built
    c_impl = None

if c_impl is not None and os.environ.get("HYPERCOLOR_PURE_PYTHON") != "1":
    _impl = c_impl
    BACKEND = "cython"
else:
    _impl = py_impl
    BACKEND = "python"

PROPER, STRONG, CONFLICT_FREE = py_impl.PROPER, py_impl.STRONG, py_impl.CONFLICT_FREE


def search(npos, k, mode, pos_ptr, chk_ptr, verts, limit=1, ncol=None):
    return _impl.search(npos, k, mode, pos_ptr, chk_ptr, verts, limit, ncol)


def first_clique(nbr, n, size, min_last=0):
    if n > 64:
        return py_impl.first_clique(nbr, n, size, min_last)
    return _impl.first_clique(nbr, n, size, min_last)


def g_table(values, k):
    return _impl.g_table(values, k)
