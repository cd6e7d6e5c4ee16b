"""Hypergraph vertex coloring: representations, verification, compactness search,
reversal gadgets and the repeating-tails principles."""

from ._kernels import BACKEND
from .colorings import Coloring, Mode, VerifyReport, verify
from .hypergraph import CharFn, Finite, Hypergraph, Repr, TailFrom, seq_graph
from .solver import Colored, DepthExhausted, Uncolorable, all_colorings, level_nodes, solve

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CharFn",
    "Colored",
    "Coloring",
    "DepthExhausted",
    "Finite",
    "Hypergraph",
    "Mode",
    "Repr",
    "TailFrom",
    "Uncolorable",
    "VerifyReport",
    "all_colorings",
    "level_nodes",
    "seq_graph",
    "solve",
    "verify",
]
