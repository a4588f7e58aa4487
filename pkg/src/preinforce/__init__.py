"""Exact p-domination numbers, p-reinforcement numbers and their certificates."""

from .bounds import BoundReport, bound_report, mu_p
from .closed_forms import PartiteSpec, multipartite_formula
from .graph import (
    Graph,
    add_edge,
    add_edges,
    complement_nonedges,
    complete_multipartite,
    cycle_graph,
    new_graph,
    parse_edge_list,
    path_graph,
    serialize_edge_list,
)
from .pdomination import DominationResult, all_min_p_dominating_sets, gamma_p, is_p_dominating
from .reduction import Cnf3, build_gadget, parse_dimacs_cnf, verify_reduction
from .reinforcement import EtaResult, ReinforcementCertificate, eta_p, r_p, validate_certificate

__all__ = [
    "BoundReport",
    "Cnf3",
    "DominationResult",
    "EtaResult",
    "Graph",
    "PartiteSpec",
    "ReinforcementCertificate",
    "add_edge",
    "add_edges",
    "all_min_p_dominating_sets",
    "bound_report",
    "build_gadget",
    "complement_nonedges",
    "complete_multipartite",
    "cycle_graph",
    "eta_p",
    "gamma_p",
    "is_p_dominating",
    "mu_p",
    "multipartite_formula",
    "new_graph",
    "parse_dimacs_cnf",
    "parse_edge_list",
    "path_graph",
    "r_p",
    "serialize_edge_list",
    "validate_certificate",
    "verify_reduction",
]
