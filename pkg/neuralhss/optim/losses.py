# ruff: noqa: TID252
"""Training losses and regularizers."""

from collections.abc import Sequence

import numpy as np

from ..helpers.general import Validator


# ----------------------------------------------------------------------------
def mse_loss(pred: np.ndarray, target: np.ndarray) -> tuple[float, np.ndarray]:
    """Batch mean of the squared l2 error per sample, and its gradient."""

    Validator.check_same_shape(pred, target, "mse_loss")
    batch = pred.shape[0]
    diff = pred - target
    value = float(np.sum(diff * diff)) / batch
    return value, (2.0 / batch) * diff


# ----------------------------------------------------------------------------
def alpha_penalty(
    alphas: Sequence[float], coefficient: float
) -> tuple[float, np.ndarray]:
    """lambda/2 * sum (alpha_i - 1)^2 and its gradient lambda * (alpha_i - 1)."""

    if coefficient < 0:
        msg = f"alpha_penalty: coefficient must be >= 0, got {coefficient}"
        raise ValueError(msg)

    offsets = np.asarray(alphas, dtype=float) - 1.0
    if coefficient == 0:
        return 0.0, np.zeros_like(offsets)
    return 0.5 * coefficient * float(np.sum(offsets * offsets)), coefficient * offsets
