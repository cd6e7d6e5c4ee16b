"""Generators, local colorings and decoders for the reversal constructions."""

from .injections import (
    Injection,
    cantor_pair,
    cantor_unpair,
    thm3_decode,
    thm3_gadget,
    thm4_decode,
    thm4_gadget,
    thm6_decode,
    thm6_gadget,
    thm6_local_coloring,
    thm7_decode,
    thm7_strong2_gadget,
    thm7_strong2_local_coloring,
    thm7_strong3_gadget,
    thm7_strong3_local_coloring,
)
from .nested import k_extension, matryoshka, matryoshka_local_coloring
from .trees import (
    TreeSpec,
    coloring_to_path,
    leaf_transform,
    path_to_coloring,
    tree_from_meta,
    tree_gadget,
    tree_leaves_brute,
)

__all__ = [
    "Injection",
    "TreeSpec",
    "cantor_pair",
    "cantor_unpair",
    "coloring_to_path",
    "k_extension",
    "leaf_transform",
    "matryoshka",
    "matryoshka_local_coloring",
    "path_to_coloring",
    "thm3_decode",
    "thm3_gadget",
    "thm4_decode",
    "thm4_gadget",
    "thm6_decode",
    "thm6_gadget",
    "thm6_local_coloring",
    "thm7_decode",
    "thm7_strong2_gadget",
    "thm7_strong2_local_coloring",
    "thm7_strong3_gadget",
    "thm7_strong3_local_coloring",
    "tree_from_meta",
    "tree_gadget",
    "tree_leaves_brute",
]
