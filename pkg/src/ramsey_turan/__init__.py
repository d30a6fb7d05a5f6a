"""Exact engine for classical, local and mean Ramsey / Ramsey-Turán
quantities at desk scale: constructions, certified searches, counting
oracles and regularity-style diagnostics on graphs of up to 64 vertices."""

__version__ = "0.1.0"

from .graph_core import (
    BudgetExceededError,
    Graph,
    chromatic_number,
    clique_number,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    find_clique,
    find_subgraph,
    path_graph,
    turan_edge_count,
    turan_graph,
)
from .coloring import (
    ColoringConstraint,
    EdgeColoring,
    ExactlyKColors,
    KLocal,
    RhoMean,
    canonical_code,
    canonical_graph_code,
    constraint_from_string,
    constraint_to_string,
    find_monochromatic,
    satisfies,
)
from .constructions import (
    ColoredGraph,
    SparsifyResult,
    blow_up,
    k5_no_mono_triangle,
    sparsify_to_mean,
    turan5_witness,
)
from .search import (
    Certificate,
    SearchBudget,
    exists_good_coloring,
    lower_bound_certificate,
    min_color_sum,
    ramsey_exact,
    rt_exact,
    verify_certificate,
)
from .factors import CliqueFactor, clique_factor, near_triangle_factor
from .regularity import (
    ClusterGraph,
    Partition,
    cluster_graph,
    density,
    is_equitable,
    is_regular_pair,
    majority_color_clusters,
)

__all__ = [
    "BudgetExceededError",
    "Certificate",
    "CliqueFactor",
    "ClusterGraph",
    "ColoredGraph",
    "ColoringConstraint",
    "EdgeColoring",
    "ExactlyKColors",
    "Graph",
    "KLocal",
    "Partition",
    "RhoMean",
    "SearchBudget",
    "SparsifyResult",
    "blow_up",
    "canonical_code",
    "canonical_graph_code",
    "chromatic_number",
    "clique_factor",
    "clique_number",
    "cluster_graph",
    "complete_bipartite_graph",
    "complete_graph",
    "constraint_from_string",
    "constraint_to_string",
    "cycle_graph",
    "density",
    "empty_graph",
    "exists_good_coloring",
    "find_clique",
    "find_monochromatic",
    "find_subgraph",
    "is_equitable",
    "is_regular_pair",
    "k5_no_mono_triangle",
    "lower_bound_certificate",
    "majority_color_clusters",
    "min_color_sum",
    "near_triangle_factor",
    "path_graph",
    "ramsey_exact",
    "rt_exact",
    "satisfies",
    "sparsify_to_mean",
    "turan5_witness",
    "turan_edge_count",
    "turan_graph",
    "verify_certificate",
]
