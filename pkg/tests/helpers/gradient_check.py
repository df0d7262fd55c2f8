"""Central finite difference checks of analytic gradients."""

from collections.abc import Callable

import numpy as np


def numeric_gradient(
    loss: Callable[[], float], block: np.ndarray, step: float = 1e-6
) -> np.ndarray:
    """Central differences of loss with respect to every entry of block, in place."""

    grad = np.zeros_like(block)
    flat = block.reshape(-1)
    out = grad.reshape(-1)
    for i in range(flat.size):
        saved = flat[i]
        flat[i] = saved + step
        plus = loss()
        flat[i] = saved - step
        minus = loss()
        flat[i] = saved
        out[i] = (plus - minus) / (2.0 * step)
    return grad


def relative_error(analytic: np.ndarray, numeric: np.ndarray) -> float:
    """||analytic - numeric|| / max(||numeric||, 1e-12)."""

    scale = max(float(np.linalg.norm(numeric)), 1e-12)
    return float(np.linalg.norm(analytic - numeric)) / scale
