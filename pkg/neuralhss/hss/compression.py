# ruff: noqa: TID252
"""Compression of dense matrices into HSS form and epsilon-rank."""

import logging

import numpy as np
from scipy.linalg import block_diag, svd, svdvals

from ..exceptions.structure_exception import StructureExceptionError
from ..helpers.general import Validator
from ..helpers.utils import sign_fix_columns
from ..models.model_hss import ClusterTree, HssLevel, HssMatrix

# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
_LOGGER = logging.getLogger(__name__)


# ----------------------------------------------------------------------------
def _leading_left_vectors(block: np.ndarray, r: int) -> np.ndarray:
    """Top-r left singular vectors of block, sign-fixed."""

    u, _, _ = svd(block, full_matrices=False)
    return sign_fix_columns(u[:, :r])


# ----------------------------------------------------------------------------
def _compress_level(
    current: np.ndarray, tree: ClusterTree, r: int
) -> tuple[HssLevel, np.ndarray]:
    """Split off the leaf generators of current and return the reduced core."""

    diag_blocks = []
    col_bases = []
    row_bases = []
    for lo, hi in tree.leaves:
        diag_blocks.append(current[lo:hi, lo:hi])
        off_row = np.hstack((current[lo:hi, :lo], current[lo:hi, hi:]))
        off_col = np.vstack((current[:lo, lo:hi], current[hi:, lo:hi]))
        col_bases.append(_leading_left_vectors(off_row, r))
        row_bases.append(_leading_left_vectors(off_col.T, r))

    level = HssLevel(
        np.array(diag_blocks), np.array(col_bases), np.array(row_bases)
    )
    remainder = current - block_diag(*level.d)
    core = block_diag(*level.u).T @ remainder @ block_diag(*level.v)
    return level, core


# ----------------------------------------------------------------------------
def dense_to_hss(A: np.ndarray, tree: ClusterTree, r: int) -> HssMatrix:
    """Compress A into HSS(r, tree) with orthonormal leaf bases.

    Singular values are absorbed into the recursed core
    A^(L-1) = U^T (A - D) V. Matrices that are exactly HSS(r, tree) are
    reproduced to round-off; anything else is compressed lossily.
    """

    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        msg = f"dense_to_hss: expected a square matrix, got shape {A.shape}"
        raise StructureExceptionError(msg)

    Validator.check_shape(A, (tree.d, tree.d), "dense_to_hss input")
    if tree.depth >= 1 and tree.leaf_size < r:
        msg = f"dense_to_hss: leaf size {tree.leaf_size} is smaller than rank {r}"
        raise StructureExceptionError(msg)

    levels: list[HssLevel] = []
    current = np.array(A, dtype=np.float64)
    current_tree = tree
    while current_tree.depth > 0:
        level, current = _compress_level(current, current_tree, r)
        levels.append(level)
        current_tree = ClusterTree(current_tree.leaf_count * r, current_tree.depth - 1)

    if _LOGGER.isEnabledFor(logging.DEBUG):
        _LOGGER.debug("dense_to_hss: d=%s, L=%s, r=%s", tree.d, tree.depth, r)

    return HssMatrix(tree, r, levels, current)


# ----------------------------------------------------------------------------
def epsilon_rank(B: np.ndarray, eps: float) -> int:
    """Smallest k with ||(sigma_{k+1}, sigma_{k+2}, ...)||_2 <= eps."""

    if eps <= 0.0:
        msg = f"epsilon_rank: eps must be positive, got {eps}"
        raise ValueError(msg)

    sigma = svdvals(B)
    tail_sq = np.concatenate((np.cumsum((sigma**2)[::-1])[::-1], [0.0]))
    return int(np.argmax(np.sqrt(tail_sq) <= eps))
