"""Constructive k-tuple and k-tuple total domination for regular graphs."""

from .auxgraphs import closed_square_graph, common_neighbor_graph
from .bounds import (
    BoundReport,
    compare_report,
    constructive_bounds,
    log_bound_closed,
    log_bound_total,
)
from .coloring import Coloring, brooks_coloring, find_complete_components, greedy_coloring
from .domination import (
    BRANCH_GENERIC,
    BRANCH_MOORE,
    BRANCH_PLANE,
    DominationCertificate,
    dominating_r,
    set_from_coloring,
    total_dominating_r_minus_1,
    verify_closed,
    verify_total,
)
from .exact import DEFAULT_BUDGET, ExactResult, exact_gamma_closed, exact_gamma_total
from .formats import parse_dimacs, parse_graph6, write_dimacs, write_graph6
from .generators import GENERATOR_ID, random_regular
from .graph import Graph

__all__ = [
    "BRANCH_GENERIC",
    "BRANCH_MOORE",
    "BRANCH_PLANE",
    "BoundReport",
    "Coloring",
    "DEFAULT_BUDGET",
    "DominationCertificate",
    "ExactResult",
    "GENERATOR_ID",
    "Graph",
    "brooks_coloring",
    "closed_square_graph",
    "common_neighbor_graph",
    "compare_report",
    "constructive_bounds",
    "dominating_r",
    "exact_gamma_closed",
    "exact_gamma_total",
    "find_complete_components",
    "greedy_coloring",
    "log_bound_closed",
    "log_bound_total",
    "parse_dimacs",
    "parse_graph6",
    "random_regular",
    "set_from_coloring",
    "total_dominating_r_minus_1",
    "verify_closed",
    "verify_total",
    "write_dimacs",
    "write_graph6",
]
