"""Exact counting, enumeration and signing of 1-factorisations of GP(3k, k)."""

from .errors import (
    IncompleteColouring, InstanceTooLarge, InvalidParameters, NonIntegerResult,
    NotApplicable, NotExtendable, Unsolvable, VertexNotInGraph,
)
from .factorisation import (
    EdgeColouring, OneFactorisation, alon_tarsi_sum, brute_force_colourings,
    count_1f, enumerate_1f, extend_outer, sign_of, sign_product_along_triples,
    signed_count_1f, triples_of, vertex_sign,
)
from .gp_core import GPGraph, RotationSystem, build_gp, export_graph
from .list_colouring import (
    ListAssignment, random_lists, solve_list_colouring, verify_choosability_sample,
)
from .triple_dynamics import (
    H, H_PM, T, T_PM, Kind, SignedCount, TripleGraph, closed_form_signed_t,
    closed_form_t, count_walks, jacobsthal, lift_walk, triple_graph,
)

__all__ = [
    "EdgeColouring", "GPGraph", "H", "H_PM", "IncompleteColouring", "InstanceTooLarge",
    "InvalidParameters", "Kind", "ListAssignment", "NonIntegerResult", "NotApplicable",
    "NotExtendable", "OneFactorisation", "RotationSystem", "SignedCount", "T", "T_PM",
    "TripleGraph", "Unsolvable", "VertexNotInGraph", "alon_tarsi_sum", "brute_force_colourings",
    "build_gp", "closed_form_signed_t", "closed_form_t", "count_1f", "count_walks",
    "enumerate_1f", "export_graph", "extend_outer", "jacobsthal", "lift_walk",
    "random_lists", "sign_of", "sign_product_along_triples", "signed_count_1f",
    "solve_list_colouring", "triple_graph", "triples_of", "vertex_sign",
    "verify_choosability_sample",
]
