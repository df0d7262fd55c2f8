# ruff: noqa: TID252
"""Modal product and the learnable-slope LeakyReLU."""

import numpy as np

from ..exceptions.structure_exception import StructureExceptionError


# ----------------------------------------------------------------------------
def modal_product(Z: np.ndarray, W: np.ndarray, k: int) -> np.ndarray:
    """k-th modal product (0-based mode): contract mode k of Z with W's columns.

    (Z x_k W)[..., i_k, ...] = sum_j Z[..., j, ...] W[i_k, j]
    """

    if not 0 <= k < Z.ndim:
        msg = f"modal_product: mode {k} outside tensor of order {Z.ndim}"
        raise StructureExceptionError(msg)

    if W.ndim != 2 or W.shape[1] != Z.shape[k]:
        msg = (
            f"modal_product: matrix of shape {W.shape} cannot act on mode {k} "
            f"of extent {Z.shape[k]}"
        )
        raise StructureExceptionError(msg)

    return np.moveaxis(np.tensordot(W, Z, axes=([1], [k])), 0, k)


# ----------------------------------------------------------------------------
def _slope(alpha: np.ndarray | float) -> float:
    return float(np.asarray(alpha, dtype=np.float64).reshape(-1)[0])


# ----------------------------------------------------------------------------
def leaky_relu(x: np.ndarray, alpha: np.ndarray | float) -> np.ndarray:
    """x where x >= 0, alpha * x elsewhere."""

    return np.where(x >= 0, x, _slope(alpha) * x)


# ----------------------------------------------------------------------------
def leaky_relu_vjp(
    x: np.ndarray, alpha: np.ndarray | float, dy: np.ndarray
) -> tuple[np.ndarray, float]:
    """Return (dx, dalpha) for upstream gradient dy at input x."""

    slope = _slope(alpha)
    negative = x < 0
    dx = np.where(negative, slope * dy, dy)
    dalpha = float(np.sum(np.where(negative, dy * x, 0.0)))
    return dx, dalpha
