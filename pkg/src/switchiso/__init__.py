"""Classify signed graphs up to switching equivalence and switching isomorphism.

A signed graph assigns +1 or -1 to each edge of a simple graph.  Switchings
(negating all edges across a vertex cut) partition the 2^m signings into
2^(m-n+c) classes, and the automorphism group of the underlying graph acts
on those classes; the orbits are the switching-isomorphism types.  This
package computes all of it exactly at desk scale, with explicit guards.
"""

from .errors import Graph6ParseError, GuardExceeded
from .gf2 import BitVector, Gf2Basis, cut_space_basis, min_weight_coset_member
from .graphs import (
    GpVertex,
    Graph,
    complete_graph,
    connected_components,
    generalized_petersen,
    parse_graph6,
    vertex_cut_edges,
)
from .signing import (
    SignedGraph,
    SwitchingClass,
    SwitchingFunction,
    class_of,
    count_classes,
    enumerate_classes,
    minimum_signing,
    mu,
    negative_subgraph,
    signed_degrees,
    switch,
    switching_equivalent,
    switching_witness,
)
from .symmetry import (
    EXCEPTIONAL_GP_PAIRS,
    EdgePermutation,
    ExceptionalGpPair,
    PermutationGroup,
    VertexPermutation,
    brute_automorphisms,
    closure,
    complete_graph_generators,
    gp_automorphism_group,
    gp_generators,
    induced_edge_perm,
    is_automorphism,
    iter_isomorphisms,
)
from .classify import (
    GpEdgeLayers,
    OrbitReport,
    act_on_class,
    burnside_count,
    enumerate_bounded_degree_graphs,
    gp_edge_layers,
    graphs_isomorphic,
    negative_iso_implies_same_orbit_check,
    orbits,
    signed_automorphism_group,
    switching_isomorphic,
    verify_lower_bound,
)

__version__ = "0.1.0"

__all__ = [
    "BitVector",
    "EXCEPTIONAL_GP_PAIRS",
    "EdgePermutation",
    "ExceptionalGpPair",
    "Gf2Basis",
    "GpEdgeLayers",
    "GpVertex",
    "Graph",
    "Graph6ParseError",
    "GuardExceeded",
    "OrbitReport",
    "PermutationGroup",
    "SignedGraph",
    "SwitchingClass",
    "SwitchingFunction",
    "VertexPermutation",
    "act_on_class",
    "brute_automorphisms",
    "burnside_count",
    "class_of",
    "closure",
    "complete_graph",
    "complete_graph_generators",
    "connected_components",
    "count_classes",
    "cut_space_basis",
    "enumerate_bounded_degree_graphs",
    "enumerate_classes",
    "generalized_petersen",
    "gp_automorphism_group",
    "gp_edge_layers",
    "gp_generators",
    "graphs_isomorphic",
    "induced_edge_perm",
    "is_automorphism",
    "iter_isomorphisms",
    "min_weight_coset_member",
    "minimum_signing",
    "mu",
    "negative_iso_implies_same_orbit_check",
    "negative_subgraph",
    "orbits",
    "parse_graph6",
    "signed_automorphism_group",
    "signed_degrees",
    "switch",
    "switching_equivalent",
    "switching_isomorphic",
    "switching_witness",
    "verify_lower_bound",
    "vertex_cut_edges",
]
