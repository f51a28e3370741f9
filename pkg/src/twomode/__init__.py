"""Closeness centralization on two-mode (bipartite) networks.

Exact closeness and Freeman centralization, the extremal tree
``H(u; n0, n1)`` with its closed-form value, the tree rewrites that push any
bipartite graph towards it, and exhaustive checks at small sizes.
"""

from .edgelist import (
    TwoModeEdgeList,
    emit_extremal,
    fixture_path,
    load_bipartite,
    load_fixture,
    parse_two_mode,
)
from .enumeration import (
    EnumerationSpec,
    VerificationReport,
    eigenvector_conjecture_scan,
    enumerate_bipartite_trees,
    enumerate_connected_bipartite_graphs,
    verify_bipartite_theorem,
    verify_star_theorem,
)
from .extremal import (
    ExtremalParams,
    WProfile,
    asymptotic_limit,
    build_extremal_tree,
    closed_form_centralization,
    closed_form_w_profile,
    extremal_params,
    lower_bound,
)
from .graph import (
    A0,
    A1,
    BipartiteGraph,
    CentralityReport,
    Graph,
    bfs_distances,
    bfs_spanning_tree,
    build_bipartite,
    centrality_report,
    centralization,
    closeness,
    eigenvector_centrality,
    max_degree_property_check,
    part_max_centralization,
    total_distance,
)
from .report import analyze
from .transforms import (
    TransformContext,
    apply_flatten,
    audit_transform,
    build_flatten_context,
    rewire_balance,
)

__version__ = "0.1.0"

__all__ = [
    "A0",
    "A1",
    "analyze",
    "apply_flatten",
    "asymptotic_limit",
    "audit_transform",
    "bfs_distances",
    "bfs_spanning_tree",
    "BipartiteGraph",
    "build_bipartite",
    "build_extremal_tree",
    "build_flatten_context",
    "centrality_report",
    "CentralityReport",
    "centralization",
    "closed_form_centralization",
    "closed_form_w_profile",
    "closeness",
    "eigenvector_centrality",
    "eigenvector_conjecture_scan",
    "emit_extremal",
    "enumerate_bipartite_trees",
    "enumerate_connected_bipartite_graphs",
    "EnumerationSpec",
    "extremal_params",
    "ExtremalParams",
    "fixture_path",
    "Graph",
    "load_bipartite",
    "load_fixture",
    "lower_bound",
    "max_degree_property_check",
    "parse_two_mode",
    "part_max_centralization",
    "rewire_balance",
    "total_distance",
    "TransformContext",
    "TwoModeEdgeList",
    "VerificationReport",
    "verify_bipartite_theorem",
    "verify_star_theorem",
    "WProfile",
]
