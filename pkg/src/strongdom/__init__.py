"""Exact strong domination numbers and audits of their behaviour under edge
operations, corona products and k-subdivisions."""

from strongdom.audits import (
    audit_corollary,
    audit_corona_deletion,
    audit_corona_subdivision,
    audit_edge_contraction,
    audit_edge_deletion,
    audit_edge_subdivision,
    audit_fixture_tightness,
    audit_ksub,
    search_equal_deletion_subdivision,
)
from strongdom.errors import BudgetExhausted, GraphValidationError, ParseError, ResourceCapError
from strongdom.graph import Graph, corona, fixture, named_graph
from strongdom.io import parse_edge_list, parse_graph6, write_edge_list, write_graph6
from strongdom.solver import Mode, SolverConfig, gamma_st, solve, verify
from strongdom.transforms import contract_edge, delete_edge, k_subdivision, subdivide_edge

__version__ = "0.1.0"

__all__ = [
    "BudgetExhausted", "Graph", "GraphValidationError", "Mode", "ParseError", "ResourceCapError",
    "SolverConfig", "audit_corollary", "audit_corona_deletion", "audit_corona_subdivision",
    "audit_edge_contraction", "audit_edge_deletion", "audit_edge_subdivision",
    "audit_fixture_tightness", "audit_ksub", "contract_edge", "corona", "delete_edge", "fixture",
    "gamma_st", "k_subdivision", "named_graph", "parse_edge_list", "parse_graph6",
    "search_equal_deletion_subdivision", "solve", "subdivide_edge", "verify", "write_edge_list",
    "write_graph6",
]
