"""Weak modular products of graphs.

Perfection classification of ``G wmp H``, an odd-hole oracle that checks it,
and the isomorphism test that reads a bijection off a maximum clique.
"""

from .classifier import Classification, classify, explain
from .errors import (EmptySelection, GraphError, InvalidEdge, ParseError, SizeMismatch,
                     SizeOutOfRange)
from .expr import parse_expr
from .graph import (Graph, are_isomorphic_bruteforce, build, complement, connected_components,
                    disjoint_union, induced_subgraph, line_graph)
from .graph6 import encode_graph6, parse_graph6
from .kozen import iso_via_product, max_clique
from .perfection import find_odd_hole, is_perfect_oracle
from .products import ProductGraph, tensor_product, weak_modular_product

__version__ = "0.1.0"

__all__ = [
    "Classification", "EmptySelection", "Graph", "GraphError", "InvalidEdge", "ParseError",
    "ProductGraph", "SizeMismatch", "SizeOutOfRange", "are_isomorphic_bruteforce", "build",
    "classify", "complement", "connected_components", "disjoint_union", "encode_graph6",
    "explain", "find_odd_hole", "induced_subgraph", "is_perfect_oracle", "iso_via_product",
    "line_graph", "max_clique", "parse_expr", "parse_graph6", "tensor_product",
    "weak_modular_product",
]
