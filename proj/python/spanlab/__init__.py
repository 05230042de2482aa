"""Exact L(p,q)-labeling: brute force, tree decomposition DP, twin cover."""

from ._spanlab import (
    ContractError,
    Graph,
    Refusal,
    approx_lp1,
    decide_dp,
    decide_exact,
    decide_tc,
    emit_dist2,
    emit_gr,
    emit_phi,
    lambda_dp,
    lambda_exact,
    lambda_l11,
    lambda_tc,
    min_twin_cover,
    naive_model_check,
    new_graph,
    parse_gr,
    verify,
)

__all__ = [
    "ContractError",
    "Graph",
    "Refusal",
    "approx_lp1",
    "decide_dp",
    "decide_exact",
    "decide_tc",
    "emit_dist2",
    "emit_gr",
    "emit_phi",
    "lambda_dp",
    "lambda_exact",
    "lambda_l11",
    "lambda_tc",
    "min_twin_cover",
    "naive_model_check",
    "new_graph",
    "parse_gr",
    "verify",
]
