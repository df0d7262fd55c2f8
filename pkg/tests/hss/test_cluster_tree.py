"""Tests for cluster trees and admissibility."""

import pytest

from neuralhss.exceptions.structure_exception import StructureExceptionError
from neuralhss.hss.cluster_tree import (
    admissible_pairs,
    build_balanced_tree,
    cluster_distance,
    is_admissible,
)
from neuralhss.models.model_hss import ClusterTree


def test_balanced_tree_leaves():
    """Leaves are contiguous halves of their parents."""

    tree = build_balanced_tree(16, 2)

    assert tree.leaf_size == 4
    assert tree.leaf_count == 4
    assert tree.leaves == [(0, 4), (4, 8), (8, 12), (12, 16)]
    assert tree.level(0) == [(0, 16)]
    assert tree.children(1, 1) == ((8, 12), (12, 16))
    assert len(tree.nodes) == 3


def test_depth_zero_tree():
    """A depth-zero tree is a single leaf."""

    tree = ClusterTree(5, 0)
    assert tree.leaves == [(0, 5)]
    with pytest.raises(StructureExceptionError):
        tree.children(0, 0)


@pytest.mark.parametrize(("d", "depth"), [(12, 3), (0, 1), (8, -1)])
def test_ragged_tree_rejected(d, depth):
    """2^L must divide d and both must be in range."""

    with pytest.raises(StructureExceptionError):
        ClusterTree(d, depth)


def test_level_out_of_range():
    """Levels deeper than the tree are rejected."""

    with pytest.raises(StructureExceptionError):
        ClusterTree(8, 2).level(3)


def test_touching_clusters_not_admissible():
    """Neighbouring clusters have zero distance."""

    assert cluster_distance((0, 4), (4, 8), 16) == 0.0
    assert not is_admissible((0, 4), (4, 8), 16, 10.0)


def test_separated_clusters_admissible():
    """Clusters one width apart pass for eta >= 1."""

    assert cluster_distance((0, 4), (8, 12), 16) == pytest.approx(0.25)
    assert is_admissible((0, 4), (8, 12), 16, 1.0)
    assert not is_admissible((0, 4), (8, 12), 16, 0.5)


def test_admissible_pairs_are_ordered_and_separated():
    """Every pair lies on one level with the row cluster on the left."""

    tree = ClusterTree(64, 4)
    pairs = admissible_pairs(tree, 1.0)

    assert pairs
    for level, first, second in pairs:
        assert 1 <= level <= tree.depth
        assert first[1] < second[0]
        assert first in tree.level(level)
        assert second in tree.level(level)


def test_no_admissible_pairs_on_shallow_tree():
    """Two halves always touch."""

    assert admissible_pairs(ClusterTree(16, 1), 1.0) == []


def test_admissible_pairs_form_block_partition():
    """A kept pair never has an admissible parent pair, and none repeats."""

    tree = ClusterTree(512, 4)
    pairs = admissible_pairs(tree, 1.0)

    assert len(pairs) == len(set(pairs))
    for level, first, second in pairs:
        if level == 1:
            continue
        parents = tree.level(level - 1)
        i = tree.level(level).index(first) // 2
        j = tree.level(level).index(second) // 2
        assert i == j or not is_admissible(parents[i], parents[j], tree.d, 1.0)


def test_admissible_pairs_cover_far_field_once():
    """Every leaf pair that is far apart lies in exactly one kept block."""

    tree = ClusterTree(64, 4)
    pairs = admissible_pairs(tree, 1.0)

    covered = {}
    for _, first, second in pairs:
        for row in range(*first):
            for col in range(*second):
                covered[(row, col)] = covered.get((row, col), 0) + 1
    assert max(covered.values()) == 1
    # Leaf 0 against leaf 15 sits inside a level-2 block.
    assert (0, 63) in covered
    # Neighbouring leaves never do.
    assert (3, 4) not in covered
