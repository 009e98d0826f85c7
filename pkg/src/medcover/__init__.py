"""medcover: vertex-cover-to-clustering reductions with verified guarantees.

The package turns graphs (and d-uniform hypergraphs) into Euclidean k-median
and k-means instances whose optimal cost separates "has a small vertex cover"
from "does not", and it proves each side constructively at desk scale:

- completeness: covers give clusterings at the cheap threshold;
- soundness: cheap clusterings give back explicit small covers;
- lower bounds: safe-pair decomposition certifies per-cluster cost floors;
- oracles: exhaustive optimizers confirm every claim on small instances.
"""

from .config import DEFAULT_CONFIG, RunConfig
from .costs import (
    ExtraCost,
    MedianSolution,
    a_n_median_cost,
    closed_form_median_cost,
    cluster_points,
    disjoint_edges_median_cost,
    extra_cost,
    l1_median_cost,
    median_cost,
    one_means_cost,
    simplex_median_cost,
    sqrt_bound,
    star_median_cost,
    weiszfeld,
)
from .covers import (
    CoverResult,
    SingleEdgeCoverOutcome,
    SoundnessReport,
    cover_case_dispatch,
    cover_general,
    cover_matching_two,
    cover_nonstar_means,
    cover_single_edge_clusters,
    soundness_assemble,
)
from .decomposition import (
    DecompositionTrace,
    LowerBoundCertificate,
    certify_c5,
    certify_lower_bound,
    decompose,
    find_safe_pair,
    residual_class_bound,
)
from .errors import (
    Case2Reached,
    DomainError,
    EmptyGraph,
    InstanceTooLarge,
    InvalidPartition,
    MedcoverError,
    NotBipartite,
    PreconditionViolated,
    Stuck,
)
from .graphs import (
    ClassTag,
    Graph,
    GraphClass,
    Matching,
    classify,
    format_edge_list,
    graph_from_edges,
    is_triangle_free,
    is_vertex_cover,
    konig_cover,
    make_graph,
    maximum_matching,
    parse_edge_list,
)
from .oracle import (
    OracleReport,
    canonical_form,
    enumerate_triangle_free,
    min_vertex_cover,
    opt_continuous,
    opt_discrete,
    random_triangle_free,
)
from .reduction import (
    ClusteringInstance,
    GapPrediction,
    HypergraphInstance,
    parse_hyperedges,
    predict_gap_graph,
    predict_gap_hypergraph,
    reduce_graph,
    reduce_hypergraph,
)
from .suites import SUITES, run_all

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_CONFIG",
    "RunConfig",
    "ExtraCost",
    "MedianSolution",
    "a_n_median_cost",
    "closed_form_median_cost",
    "cluster_points",
    "disjoint_edges_median_cost",
    "extra_cost",
    "l1_median_cost",
    "median_cost",
    "one_means_cost",
    "simplex_median_cost",
    "sqrt_bound",
    "star_median_cost",
    "weiszfeld",
    "CoverResult",
    "SingleEdgeCoverOutcome",
    "SoundnessReport",
    "cover_case_dispatch",
    "cover_general",
    "cover_matching_two",
    "cover_nonstar_means",
    "cover_single_edge_clusters",
    "soundness_assemble",
    "DecompositionTrace",
    "LowerBoundCertificate",
    "certify_c5",
    "certify_lower_bound",
    "decompose",
    "find_safe_pair",
    "residual_class_bound",
    "Case2Reached",
    "DomainError",
    "EmptyGraph",
    "InstanceTooLarge",
    "InvalidPartition",
    "MedcoverError",
    "NotBipartite",
    "PreconditionViolated",
    "Stuck",
    "ClassTag",
    "Graph",
    "GraphClass",
    "Matching",
    "classify",
    "format_edge_list",
    "graph_from_edges",
    "is_triangle_free",
    "is_vertex_cover",
    "konig_cover",
    "make_graph",
    "maximum_matching",
    "parse_edge_list",
    "OracleReport",
    "canonical_form",
    "enumerate_triangle_free",
    "min_vertex_cover",
    "opt_continuous",
    "opt_discrete",
    "random_triangle_free",
    "ClusteringInstance",
    "GapPrediction",
    "HypergraphInstance",
    "parse_hyperedges",
    "predict_gap_graph",
    "predict_gap_hypergraph",
    "reduce_graph",
    "reduce_hypergraph",
    "SUITES",
    "run_all",
    "__version__",
]
