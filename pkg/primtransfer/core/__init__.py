"""Matrices, digraphs, permutations and canonical forms."""

from .canonical import (
    canonical_form,
    canonical_key,
    find_conjugator,
    orbit_keys,
    orbit_size,
)
from .config import CanonicalConfig
from .digraph import Digraph, digraph_from_matrix, matrix_from_digraph
from .matrix import ZeroOneMatrix, iter_bits, mask_of, unit_row
from .permutation import Permutation, conjugate
from .textio import format_matrix, parse_matrix, read_matrix, write_matrix

__all__ = [
    "ZeroOneMatrix",
    "Digraph",
    "Permutation",
    "CanonicalConfig",
    "matrix_from_digraph",
    "digraph_from_matrix",
    "unit_row",
    "iter_bits",
    "mask_of",
    "conjugate",
    "canonical_form",
    "canonical_key",
    "orbit_keys",
    "orbit_size",
    "find_conjugator",
    "parse_matrix",
    "format_matrix",
    "read_matrix",
    "write_matrix",
]
