"""Tests for kernel discretization."""

import numpy as np
import pytest

from neuralhss.hss.compression import epsilon_rank
from neuralhss.hss.kernels import kernel_block


def test_inverse_kernel_far_cells():
    """Far apart cells average close to 1 / |x - y| at the cell centres."""

    block = kernel_block("inverse", (0, 1), (99, 100), 100)
    assert block.shape == (1, 1)
    assert block[0, 0] == pytest.approx(1.0 / 0.99, rel=1e-4)


def test_inverse_kernel_matches_closed_form():
    """The cell average equals the exact double integral over both cells."""

    h, c = 0.01, 0.99
    exact = (
        (c + h) * np.log(c + h) + (c - h) * np.log(c - h) - 2.0 * c * np.log(c)
    ) / h**2

    block = kernel_block("inverse", (0, 1), (99, 100), 100)

    assert block[0, 0] == pytest.approx(exact, rel=1e-9)


def test_log_kernel_block_shape_and_sign():
    """log|x - y| < 0 for points closer than one."""

    block = kernel_block("log", (0, 8), (16, 24), 64, quad_order=3)
    assert block.shape == (8, 8)
    assert np.all(block < 0.0)


def test_separated_blocks_are_numerically_low_rank():
    """Admissible blocks compress far below their size."""

    block = kernel_block("inverse", (0, 32), (64, 96), 128)
    assert epsilon_rank(block, 1e-6 * np.linalg.norm(block)) < 12


def test_unknown_kernel():
    """Only the log and inverse kernels are known."""

    with pytest.raises(ValueError):
        kernel_block("gauss", (0, 1), (2, 3), 4)
