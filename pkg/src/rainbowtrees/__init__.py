"""Exact counting and extremal constructions for rainbow spanning trees."""

from .colored_graph import (
    BoundsReport,
    DecompositionTree,
    EcgParseError,
    EdgeColoredGraph,
    JLVerification,
    NotJLColoringError,
    ScaleLimitError,
    color_class_sizes,
    complete_graph,
    convexity_bounds,
    count_rst_bruteforce,
    count_rst_jl,
    enumerate_jl_colorings,
    find_rainbow_cycle,
    find_two_tree_partition,
    load_ecg,
    max_rst_over_jl,
    random_coloring_mean,
    save_ecg,
    spanning_trees,
    two_tree_partition_coloring,
    verify_jl,
)
from .jl_bipartite import (
    JLbTree,
    NuRecord,
    class_sizes,
    enumerate_jlb_trees,
    jlb_tree_to_coloring,
    max_bip_tree,
    min_bip_coloring,
    min_bip_tree,
    nu_max_formula,
    nu_max_oracle,
    nu_min_formula,
)
from .jl_core import (
    JLTree,
    MuRecord,
    beta,
    beta_series,
    beta_split,
    conjectured_split,
    enumerate_jl_trees,
    jl_tree_to_coloring,
    max_jl_tree,
    min_jl_tree,
    mu,
    tau,
    tree_rst_count,
)
from .kirchhoff import (
    ColoredLaplacian,
    SparseMultiPoly,
    colored_laplacian,
    det_bareiss,
    kirchhoff_count,
    multilinear_coeff,
    rainbow_count_mtt,
    tree_generating_function,
)

__all__ = [
    "BoundsReport",
    "ColoredLaplacian",
    "DecompositionTree",
    "EcgParseError",
    "EdgeColoredGraph",
    "JLTree",
    "JLVerification",
    "JLbTree",
    "MuRecord",
    "NotJLColoringError",
    "NuRecord",
    "ScaleLimitError",
    "SparseMultiPoly",
    "beta",
    "beta_series",
    "beta_split",
    "class_sizes",
    "color_class_sizes",
    "colored_laplacian",
    "complete_graph",
    "conjectured_split",
    "convexity_bounds",
    "count_rst_bruteforce",
    "count_rst_jl",
    "det_bareiss",
    "enumerate_jl_colorings",
    "enumerate_jl_trees",
    "enumerate_jlb_trees",
    "find_rainbow_cycle",
    "find_two_tree_partition",
    "jl_tree_to_coloring",
    "jlb_tree_to_coloring",
    "kirchhoff_count",
    "load_ecg",
    "max_bip_tree",
    "max_jl_tree",
    "max_rst_over_jl",
    "min_bip_coloring",
    "min_bip_tree",
    "min_jl_tree",
    "mu",
    "multilinear_coeff",
    "nu_max_formula",
    "nu_max_oracle",
    "nu_min_formula",
    "rainbow_count_mtt",
    "random_coloring_mean",
    "save_ecg",
    "spanning_trees",
    "tau",
    "tree_generating_function",
    "tree_rst_count",
    "two_tree_partition_coloring",
    "verify_jl",
]

__version__ = "0.1.0"
