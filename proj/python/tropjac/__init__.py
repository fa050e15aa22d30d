"""Quasistable divisors on graphs and tropical curves.

Exact-arithmetic chip-firing reduction, posets of quasistable
pseudo-divisors, tropical Jacobians, and the universal poset at small genus.
Rationals cross the boundary as ``"p/q"`` strings (plain ints are accepted
on input).
"""

from ._core import (
    CurvePoint,
    Graph,
    InternalConsistencyError,
    Polarization,
    TropicalCurve,
    ValidationError,
    automorphism_count,
    beta,
    betti,
    build_qd_poset,
    canonical_polarization,
    delta,
    enumerate_quasistable,
    genus,
    graph_from_json,
    is_quasistable,
    is_quasistable_curve,
    is_quasistable_pseudo,
    is_semistable,
    is_stable,
    jacobian_euler_characteristic,
    jacobian_f_vector,
    laplacian,
    matrix_tree_count,
    reduce_graph,
    reduce_tropical,
    run_acceptance,
    spanning_tree_path,
    spanning_trees,
    stable_graph_count,
    tropical_equivalent,
    universal_summary,
    v0_concentrated_polarization,
    valence,
    zero_polarization,
)

__all__ = [
    "CurvePoint",
    "Graph",
    "InternalConsistencyError",
    "Polarization",
    "TropicalCurve",
    "ValidationError",
    "automorphism_count",
    "beta",
    "betti",
    "build_qd_poset",
    "canonical_polarization",
    "delta",
    "enumerate_quasistable",
    "genus",
    "graph_from_json",
    "is_quasistable",
    "is_quasistable_curve",
    "is_quasistable_pseudo",
    "is_semistable",
    "is_stable",
    "jacobian_euler_characteristic",
    "jacobian_f_vector",
    "laplacian",
    "matrix_tree_count",
    "reduce_graph",
    "reduce_tropical",
    "run_acceptance",
    "spanning_tree_path",
    "spanning_trees",
    "stable_graph_count",
    "tropical_equivalent",
    "universal_summary",
    "v0_concentrated_polarization",
    "valence",
    "zero_polarization",
]
