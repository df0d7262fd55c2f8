# ruff: noqa: TID252
"""Piecewise-constant discretization of translation invariant kernels."""

from collections.abc import Callable

import numpy as np
from numpy.polynomial.legendre import leggauss

from ..const import Kernel

KERNEL_FUNCTIONS: dict[str, Callable[[np.ndarray], np.ndarray]] = {
    Kernel.LOG.value: lambda z: np.log(np.abs(z)),
    Kernel.INVERSE.value: lambda z: 1.0 / np.abs(z),
}


# ----------------------------------------------------------------------------
def _cell_nodes(cluster: tuple[int, int], n: int, order: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes inside every cell of cluster and their weights."""

    nodes, weights = leggauss(order)
    # Map from [-1, 1] to [0, 1]; the weights then sum to one.
    nodes = 0.5 * (nodes + 1.0)
    weights = 0.5 * weights
    cells = np.arange(cluster[0], cluster[1], dtype=np.float64)
    return (cells[:, None] + nodes[None, :]) / n, weights


# ----------------------------------------------------------------------------
def kernel_block(
    kernel: str,
    rows: tuple[int, int],
    cols: tuple[int, int],
    n: int,
    quad_order: int = 4,
) -> np.ndarray:
    """Cell-pair averages of k(x - y) for cells rows x cols of [0, 1] split in n.

    This is the Galerkin matrix of a unit-mass piecewise-constant basis. The
    clusters must be separated; the kernel is singular at z = 0.
    """

    if kernel not in KERNEL_FUNCTIONS:
        msg = f"Unsupported kernel: {kernel}"
        raise ValueError(msg)

    func = KERNEL_FUNCTIONS[kernel]
    xs, weights = _cell_nodes(rows, n, quad_order)
    ys, _ = _cell_nodes(cols, n, quad_order)
    diff = xs[:, None, :, None] - ys[None, :, None, :]
    values = func(diff)
    return np.einsum("ijpq,p,q->ij", values, weights, weights)
