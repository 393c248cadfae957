"""Depth and regularity of edge ideals of glued Cohen-Macaulay bipartite graphs.

Construction of bipartite building blocks, the two leaf-gluing operations,
closed-form depth/regularity evaluators, and an independent homological
oracle that verifies every formula exactly.
"""

from .cm import CMLabeling, find_cm_labeling, is_cm_bipartite, poset_to_graph, random_cm_graph
from .formulas import (
    AlgebraicValues,
    HypothesisError,
    circ_values,
    clique_sum_p2_depth,
    cm_values,
    leaf_delete_values,
    path_values,
    star_values,
)
from .glue import LeafSite, circ, clique_sum_p2, delete_leaf, leaf_sites, star_glue
from .graphs import (
    Bipartition,
    Graph,
    GraphError,
    GraphParseError,
    bipartition,
    components_and_diameters,
    induced_subgraph,
    parse_graph,
    path_graph,
    serialize_graph,
)
from .invariants import (
    InvariantReport,
    depth_bounds,
    independence_and_cover,
    induced_matching_number,
    invariant_report,
    matching_number,
    min_maximal_matching_number,
    star_packing_number,
)
from .oracle import (
    BettiTable,
    OracleCapError,
    OracleValues,
    SimplicialComplex,
    hochster_betti,
    independence_complex,
    oracle_values,
    reduced_homology_ranks,
)

__version__ = "0.1.0"
