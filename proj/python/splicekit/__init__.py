"""Companionship-graph calculus: splicing, complexity, amphichiral symmetry,
and concordance certificates."""

from ._core import (  # noqa: F401
    Action,
    Graph,
    SpliceError,
    certify,
    classify_edges,
    complexity,
    decide_structure,
    deduce_unlink,
    edge_cut,
    enumerate_norms,
    export_dot,
    export_dot_with_action,
    fixture_action,
    fixture_graph,
    fixture_names,
    fox_milnor_factor,
    maximal_coherent_subtree,
    norm_tolerance,
    reduce,
    root_of,
    run_fixture,
    set_norm_tolerance,
    validate,
    validate_action,
)

__all__ = [
    "Action",
    "Graph",
    "SpliceError",
    "certify",
    "classify_edges",
    "complexity",
    "decide_structure",
    "deduce_unlink",
    "edge_cut",
    "enumerate_norms",
    "export_dot",
    "export_dot_with_action",
    "fixture_action",
    "fixture_graph",
    "fixture_names",
    "fox_milnor_factor",
    "maximal_coherent_subtree",
    "norm_tolerance",
    "reduce",
    "root_of",
    "run_fixture",
    "set_norm_tolerance",
    "validate",
    "validate_action",
]
