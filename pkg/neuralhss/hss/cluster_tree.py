# ruff: noqa: TID252
"""Balanced cluster trees and eta-admissibility of cluster pairs."""

import logging

from ..models.model_hss import ClusterTree

# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
_LOGGER = logging.getLogger(__name__)


# ----------------------------------------------------------------------------
def build_balanced_tree(d: int, depth: int) -> ClusterTree:
    """Build the balanced tree of the given depth over [0, d)."""
    return ClusterTree(d, depth)


# ----------------------------------------------------------------------------
# Admissibility
#
# Index intervals [lo, hi) are identified with the cells they cover on a
# uniform grid of [0, 1] with spacing 1 / d.
# ----------------------------------------------------------------------------
def cluster_diameter(cluster: tuple[int, int], d: int) -> float:
    """Diameter of the union of cells in cluster."""

    lo, hi = cluster
    return (hi - lo) / d


# ----------------------------------------------------------------------------
def cluster_distance(first: tuple[int, int], second: tuple[int, int], d: int) -> float:
    """Set distance between the two clusters; zero when they touch."""

    gap = max(second[0] - first[1], first[0] - second[1], 0)
    return gap / d


# ----------------------------------------------------------------------------
def is_admissible(
    first: tuple[int, int], second: tuple[int, int], d: int, eta: float
) -> bool:
    """Eta-strong admissibility: max(diam) <= eta * dist with dist > 0."""

    dist = cluster_distance(first, second, d)
    if dist <= 0.0:
        return False

    diam = max(cluster_diameter(first, d), cluster_diameter(second, d))
    return diam <= eta * dist


# ----------------------------------------------------------------------------
def admissible_pairs(
    tree: ClusterTree, eta: float
) -> list[tuple[int, tuple[int, int], tuple[int, int]]]:
    """Return (level, row cluster, column cluster) for the admissible block partition.

    A same-level pair is kept when it is admissible and its parent pair is not,
    so each far-field block appears once at its coarsest level. The row cluster
    lies to the left of the column cluster.
    """

    pairs = []
    for ell in range(1, tree.depth + 1):
        clusters = tree.level(ell)
        parents = tree.level(ell - 1)
        for i, first in enumerate(clusters):
            for j in range(i + 1, len(clusters)):
                second = clusters[j]
                if not is_admissible(first, second, tree.d, eta):
                    continue
                if i // 2 != j // 2 and is_admissible(
                    parents[i // 2], parents[j // 2], tree.d, eta
                ):
                    continue
                pairs.append((ell, first, second))

    _LOGGER.debug(
        "admissible_pairs: d=%s, depth=%s, eta=%s -> %s blocks",
        tree.d,
        tree.depth,
        eta,
        len(pairs),
    )
    return pairs
