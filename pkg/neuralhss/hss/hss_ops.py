# ruff: noqa: TID252
"""HSS matrix construction, matvec and dense reconstruction."""

from dataclasses import dataclass, field
import logging

import numpy as np
from scipy.linalg import block_diag

from ..const import SEED_STREAM_HSS_INIT
from ..exceptions.structure_exception import StructureExceptionError
from ..helpers.general import Validator
from ..helpers.utils import block_apply, derive_rng
from ..models.model_hss import ClusterTree, HssLevel, HssMatrix

# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
_LOGGER = logging.getLogger(__name__)


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
@dataclass
class HssTape:
    """Intermediates of one batched forward pass, kept for the adjoint."""

    # Per level input blocks x_i, shape (nodes, s, B).
    inputs: list[np.ndarray] = field(default_factory=list)
    # Per level outputs of the reduced problem y_i, shape (nodes, r, B).
    cores: list[np.ndarray] = field(default_factory=list)
    # Input of the depth-0 block.
    root_input: np.ndarray | None = None


# ----------------------------------------------------------------------------
# Construction
# ----------------------------------------------------------------------------
def _level_shapes(tree: ClusterTree, r: int) -> list[tuple[int, int]]:
    """Return (node count, block size) per level, leaves first."""

    return [
        (1 << (tree.depth - k), tree.leaf_size if k == 0 else 2 * r)
        for k in range(tree.depth)
    ]


# ----------------------------------------------------------------------------
def _root_size(tree: ClusterTree, r: int) -> int:
    return 2 * r if tree.depth >= 1 else tree.d


# ----------------------------------------------------------------------------
def hss_zeros(tree: ClusterTree, r: int) -> HssMatrix:
    """Return the zero operator with the shapes of HSS(r, tree)."""

    levels = [
        HssLevel(np.zeros((n, s, s)), np.zeros((n, s, r)), np.zeros((n, s, r)))
        for n, s in _level_shapes(tree, r)
    ]
    size = _root_size(tree, r)
    return HssMatrix(tree, r, levels, np.zeros((size, size)))


# ----------------------------------------------------------------------------
def hss_identity(tree: ClusterTree, r: int) -> HssMatrix:
    """Identity embedding: identity leaf blocks, zero bases and zero core."""

    identity = hss_zeros(tree, r)
    if tree.depth == 0:
        identity.root[...] = np.eye(tree.d)
    else:
        identity.levels[0].d[...] = np.eye(tree.leaf_size)
    return identity


# ----------------------------------------------------------------------------
def hss_random(
    tree: ClusterTree,
    r: int,
    seed: int,
    scale: float = 1.0,
    index: int | None = None,
) -> HssMatrix:
    """Draw every generator block i.i.d. uniform on [-s, s], s = scale / sqrt(fan).

    fan is the column count of the block. Blocks are filled in declaration
    order (levels leaves first with D, U, V each, then the root) from a PCG64
    stream derived from seed and, for the layers of one model, index.
    """

    rng = derive_rng(seed, SEED_STREAM_HSS_INIT, index)

    def draw(shape: tuple[int, ...]) -> np.ndarray:
        bound = scale / np.sqrt(shape[-1])
        return rng.uniform(-1.0, 1.0, size=shape) * bound

    levels = [
        HssLevel(draw((n, s, s)), draw((n, s, r)), draw((n, s, r)))
        for n, s in _level_shapes(tree, r)
    ]
    size = _root_size(tree, r)
    matrix = HssMatrix(tree, r, levels, draw((size, size)))

    if _LOGGER.isEnabledFor(logging.DEBUG):
        _LOGGER.debug("hss_random: seed=%s, scale=%s, %s", seed, scale, matrix)

    return matrix


# ----------------------------------------------------------------------------
# Matvec
# ----------------------------------------------------------------------------
def hss_forward(H: HssMatrix, x: np.ndarray, tape: HssTape | None = None) -> np.ndarray:
    """Batched telescopic matvec on columns x of shape (d, B).

    Leaf V-compressions feed the reduced problem of size 2^L r, whose output is
    expanded by the leaf U bases and added to the diagonal contributions.
    Intermediates are recorded in tape when one is given.
    """

    r = H.rank
    batch = x.shape[1]
    current = x
    inputs: list[np.ndarray] = []

    for level in H.levels:
        xb = current.reshape(level.node_count, level.block_size, batch)
        inputs.append(xb)
        z = block_apply(np.swapaxes(level.v, 1, 2), xb)
        current = z.reshape(level.node_count * r, batch)

    y = block_apply(H.root[None], current[None])[0]

    cores: list[np.ndarray] = [np.empty(0)] * len(H.levels)
    for k in range(len(H.levels) - 1, -1, -1):
        level = H.levels[k]
        yb = y.reshape(level.node_count, r, batch)
        cores[k] = yb
        out = block_apply(level.u, yb)
        out += block_apply(level.d, inputs[k])
        y = out.reshape(level.node_count * level.block_size, batch)

    if tape is not None:
        tape.inputs = inputs
        tape.cores = cores
        tape.root_input = current

    return y


# ----------------------------------------------------------------------------
def hss_backward(
    H: HssMatrix, tape: HssTape, dy: np.ndarray
) -> tuple[np.ndarray, HssMatrix]:
    """Adjoint of hss_forward: return dx and the gradient of every block."""

    r = H.rank
    batch = dy.shape[1]
    d_out = dy
    diag_adjoints: list[np.ndarray] = []
    grad_levels: list[HssLevel] = []

    # Walk down: y_i = U_i y'_i + D_i x_i at every level.
    for k, level in enumerate(H.levels):
        dob = d_out.reshape(level.node_count, level.block_size, batch)
        xb = tape.inputs[k]
        yb = tape.cores[k]
        grad_levels.append(
            HssLevel(
                dob @ np.swapaxes(xb, 1, 2),
                dob @ np.swapaxes(yb, 1, 2),
                np.zeros_like(level.v),
            )
        )
        diag_adjoints.append(np.swapaxes(level.d, 1, 2) @ dob)
        d_out = (np.swapaxes(level.u, 1, 2) @ dob).reshape(level.node_count * r, batch)

    assert tape.root_input is not None
    grad_root = d_out @ tape.root_input.T
    d_in = H.root.T @ d_out

    # Walk up: z_i = V_i^T x_i feeds the reduced problem.
    for k in range(len(H.levels) - 1, -1, -1):
        level = H.levels[k]
        dzb = d_in.reshape(level.node_count, r, batch)
        grad_levels[k].v = tape.inputs[k] @ np.swapaxes(dzb, 1, 2)
        dxb = diag_adjoints[k] + level.v @ dzb
        d_in = dxb.reshape(level.node_count * level.block_size, batch)

    return d_in, HssMatrix(H.tree, r, grad_levels, grad_root)


# ----------------------------------------------------------------------------
def hss_matvec_batch(H: HssMatrix, X: np.ndarray) -> np.ndarray:
    """Column-wise matvec of X (d x B).

    Column b of the result is bitwise equal to hss_matvec(H, X[:, b]).
    """

    if X.ndim != 2 or X.shape[0] != H.d:
        msg = f"hss_matvec_batch: X has shape {X.shape}, expected ({H.d}, B)"
        raise StructureExceptionError(msg)

    return hss_forward(H, np.asarray(X, dtype=np.float64))


# ----------------------------------------------------------------------------
def hss_matvec(H: HssMatrix, x: np.ndarray) -> np.ndarray:
    """Return A x for the operator A represented by H, never forming A."""

    if x.ndim != 1 or x.shape[0] != H.d:
        msg = f"hss_matvec: x has shape {x.shape}, expected ({H.d},)"
        raise StructureExceptionError(msg)

    if not Validator.is_finite(x):
        msg = "hss_matvec: x has non-finite entries"
        raise StructureExceptionError(msg)

    return hss_matvec_batch(H, x[:, None])[:, 0]


# ----------------------------------------------------------------------------
# Dense form
# ----------------------------------------------------------------------------
def hss_to_dense(H: HssMatrix) -> np.ndarray:
    """Unroll A = D^(L) + U^(L) A^(L-1) V^(L)^T down to the root."""

    if H.depth == 0:
        return H.root.copy()

    leaves = H.levels[0]
    core = hss_to_dense(H.reduced())
    diag = block_diag(*leaves.d)
    col_basis = block_diag(*leaves.u)
    row_basis = block_diag(*leaves.v)
    return diag + col_basis @ core @ row_basis.T


# ----------------------------------------------------------------------------
def hss_param_count(H: HssMatrix) -> int:
    """Exact count of stored scalars across all D, U, V blocks."""
    return H.param_count()
