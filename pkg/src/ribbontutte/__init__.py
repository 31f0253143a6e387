"""Tutte polynomials of vertex- and boundary-coloured ribbon graphs."""

from .activities import (
    branch_to_quasi_tree,
    classify_activity,
    efvh_predicates,
    quasi_tree_expansion,
    resolution_branches,
    spanning_quasi_trees,
)
from .colouring import (
    ColouredRibbonGraph,
    coloured_equivalent,
    coloured_join,
    contract_coloured,
    delete_coloured,
    dual_coloured,
    quotient_boundary_graph,
    quotient_vertex_graph,
)
from .evaluators import (
    bollobas_riordan,
    check_duality,
    krushkal,
    p_normalized,
    t_cps,
    t_cs,
    t_ps,
    t_s,
    universal_U_recursive,
    universal_U_state_sum,
)
from .fileformat import RibbonFormatError, parse, serialize
from .generate import random_coloured_ribbon_graph
from .graphs import MultiGraph, tutte_classical, underlying
from .invariants import EdgeType, edge_type, rank_profile
from .poly import HalfPoly, parse_poly
from .ribbon import (
    RibbonError,
    RibbonGraph,
    contract_edge,
    delete_edge,
    doop_status,
    equivalent,
    geometric_dual,
    partial_dual,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
