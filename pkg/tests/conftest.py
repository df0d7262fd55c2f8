"""Fixtures for testing."""

import numpy as np
import pytest

from neuralhss.hss.hss_ops import hss_random
from neuralhss.models.model_hss import ClusterTree


@pytest.fixture
def rng():
    """Deterministic generator for test inputs."""
    return np.random.default_rng(1234)


@pytest.fixture
def small_tree():
    """Cluster tree over 16 indices with two levels."""
    return ClusterTree(16, 2)


@pytest.fixture
def small_hss(small_tree):
    """Random rank-2 HSS matrix on the small tree."""
    return hss_random(small_tree, 2, seed=7)

