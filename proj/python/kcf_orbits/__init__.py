"""Orbit codimension and closure order of Kronecker structures of matrix pencils."""

from ._kcf import (
    KcfError,
    ParseError,
    Structure,
    closure_graph,
    closure_graph_dot,
    cross_validate,
    degenerates_to,
    enumerate_structures,
    explain_degeneration,
    weighted_sum_bound,
    square_product_bounds,
    reachable,
    realize,
    same_orbit,
    tangent_codimension,
    verify_dim_theorem,
    verify_formulas,
    verify_rule_steps,
)

__all__ = [
    "KcfError",
    "ParseError",
    "Structure",
    "closure_graph",
    "closure_graph_dot",
    "cross_validate",
    "degenerates_to",
    "enumerate_structures",
    "explain_degeneration",
    "weighted_sum_bound",
    "square_product_bounds",
    "reachable",
    "realize",
    "same_orbit",
    "tangent_codimension",
    "verify_dim_theorem",
    "verify_formulas",
    "verify_rule_steps",
]
