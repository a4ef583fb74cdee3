"""Uniform embeddings of finite metric spaces and finitely generated groups
into l2-sums of lp blocks, with numerical certificates."""

from ._core import (
    CoarseEmbedError,
    Embedding,
    MetricSpace,
    check_tent_conditions,
    complete_graph,
    cycle_graph,
    embed_report,
    full_upper_constant,
    grid_graph,
    group_report,
    lemma1_bound,
    lp_norm,
    path_graph,
    random_regular,
    schedule_for_space,
    select_exponent,
    tent,
    top_two_eigenvalues,
    truncated_upper_constant,
)

__all__ = [
    "CoarseEmbedError",
    "Embedding",
    "MetricSpace",
    "check_tent_conditions",
    "complete_graph",
    "cycle_graph",
    "embed_report",
    "full_upper_constant",
    "grid_graph",
    "group_report",
    "lemma1_bound",
    "lp_norm",
    "path_graph",
    "random_regular",
    "schedule_for_space",
    "select_exponent",
    "tent",
    "top_two_eigenvalues",
    "truncated_upper_constant",
]
