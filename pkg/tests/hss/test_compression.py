"""Tests for dense to HSS compression and epsilon-rank."""

import numpy as np
import pytest

from neuralhss.exceptions.structure_exception import StructureExceptionError
from neuralhss.hss.compression import dense_to_hss, epsilon_rank
from neuralhss.hss.hss_ops import hss_random, hss_to_dense
from neuralhss.models.model_hss import ClusterTree


def test_exact_hss_matrix_is_reproduced(small_tree):
    """Compressing an HSS(r) operator at rank r loses nothing."""

    dense = hss_to_dense(hss_random(small_tree, 2, seed=3))

    # Call the method
    compressed = dense_to_hss(dense, small_tree, 2)

    # Verify results
    np.testing.assert_allclose(hss_to_dense(compressed), dense, atol=1e-10)


def test_leaf_bases_are_orthonormal(small_tree, rng):
    """Leaf U and V have orthonormal columns."""

    compressed = dense_to_hss(rng.standard_normal((16, 16)), small_tree, 2)
    for basis in (*compressed.leaf_u, *compressed.leaf_v):
        np.testing.assert_allclose(basis.T @ basis, np.eye(2), atol=1e-12)


def test_depth_zero_keeps_matrix(rng):
    """Without levels the root is the matrix itself."""

    dense = rng.standard_normal((6, 6))
    compressed = dense_to_hss(dense, ClusterTree(6, 0), 2)
    np.testing.assert_array_equal(compressed.root, dense)


def test_lossy_compression_has_bounded_error(small_tree, rng):
    """A generic matrix is approximated, not reproduced."""

    dense = rng.standard_normal((16, 16))
    error = np.linalg.norm(hss_to_dense(dense_to_hss(dense, small_tree, 2)) - dense)
    assert 0.0 < error < np.linalg.norm(dense)


def test_compression_shape_errors(small_tree):
    """Non-square and mis-sized inputs are rejected."""

    with pytest.raises(StructureExceptionError):
        dense_to_hss(np.zeros((16, 8)), small_tree, 2)
    with pytest.raises(StructureExceptionError):
        dense_to_hss(np.zeros((8, 8)), small_tree, 2)
    with pytest.raises(StructureExceptionError):
        dense_to_hss(np.zeros((16, 16)), small_tree, 5)


def test_epsilon_rank_of_known_spectrum():
    """Tail norms of diag(4, 2, 1, 0.5) decide the rank."""

    B = np.diag([4.0, 2.0, 1.0, 0.5])

    assert epsilon_rank(B, 5.0) == 0
    assert epsilon_rank(B, 1.2) == 2
    assert epsilon_rank(B, 0.5) == 3
    assert epsilon_rank(B, 1e-3) == 4


def test_epsilon_rank_is_monotone(rng):
    """Smaller tolerances never lower the rank."""

    B = rng.standard_normal((10, 7))
    ranks = [epsilon_rank(B, eps) for eps in (1.0, 1e-2, 1e-4, 1e-8)]
    assert ranks == sorted(ranks)
    assert ranks[-1] == 7


def test_epsilon_rank_rejects_non_positive_tolerance():
    """eps must be strictly positive."""

    with pytest.raises(ValueError):
        epsilon_rank(np.eye(3), 0.0)
