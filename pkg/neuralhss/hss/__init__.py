"""Cluster trees and HSS matrices."""

from .cluster_tree import (
    admissible_pairs,
    build_balanced_tree,
    cluster_diameter,
    cluster_distance,
    is_admissible,
)
from .compression import dense_to_hss, epsilon_rank
from .hss_ops import (
    HssTape,
    hss_backward,
    hss_forward,
    hss_identity,
    hss_matvec,
    hss_matvec_batch,
    hss_param_count,
    hss_random,
    hss_to_dense,
    hss_zeros,
)
from .kernels import kernel_block

__all__ = [
    "HssTape",
    "admissible_pairs",
    "build_balanced_tree",
    "cluster_diameter",
    "cluster_distance",
    "dense_to_hss",
    "epsilon_rank",
    "hss_backward",
    "hss_forward",
    "hss_identity",
    "hss_matvec",
    "hss_matvec_batch",
    "hss_param_count",
    "hss_random",
    "hss_to_dense",
    "hss_zeros",
    "is_admissible",
    "kernel_block",
]
