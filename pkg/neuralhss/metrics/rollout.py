# ruff: noqa: TID252
"""Residual-learning protocol for time-dependent equations."""

import logging

import numpy as np

from ..exceptions.metric_exception import MetricExceptionError
from ..models.model_network import NeuralHssModel
from ..neural.network import model_forward, predict

# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
_LOGGER = logging.getLogger(__name__)


# ----------------------------------------------------------------------------
def build_step_pairs(states: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Pairs (u_t, u_{t+dt} - u_t) from trajectories (N, T, *grid)."""

    if states.ndim < 3 or states.shape[1] < 2:
        msg = f"build_step_pairs: need (N, T >= 2, ...) states, got {states.shape}"
        raise MetricExceptionError(msg)

    spatial = states.shape[2:]
    inputs = states[:, :-1].reshape(-1, *spatial)
    deltas = (states[:, 1:] - states[:, :-1]).reshape(-1, *spatial)
    return inputs, deltas


# ----------------------------------------------------------------------------
def residual_scale(deltas: np.ndarray) -> float:
    """max |delta| over the training residuals; 1 when every residual is zero."""

    scale = float(np.max(np.abs(deltas))) if deltas.size else 0.0
    if scale == 0.0:
        _LOGGER.warning("residual_scale: all residuals are zero, using 1")
        return 1.0
    return scale


# ----------------------------------------------------------------------------
def _scale_of(model: NeuralHssModel) -> float:
    if model.residual_scale is None:
        msg = "Model has no residual scale; it was not trained on step residuals"
        raise MetricExceptionError(msg)
    return float(model.residual_scale)


# ----------------------------------------------------------------------------
def rollout(model: NeuralHssModel, u0: np.ndarray, steps: int) -> np.ndarray:
    """Iterate u_{t+dt} = u_t + s * model(u_t) from a batch u0 (batch, *grid).

    Returns (batch, steps + 1, *grid) with state 0 equal to u0.
    """

    scale = _scale_of(model)
    states = np.empty((u0.shape[0], steps + 1, *u0.shape[1:]))
    states[:, 0] = u0
    current = states[:, 0]
    for t in range(1, steps + 1):
        increment, _ = model_forward(model, current)
        states[:, t] = current + scale * increment
        current = states[:, t]
    return states


# ----------------------------------------------------------------------------
def predict_rescaled(model: NeuralHssModel, x: np.ndarray) -> np.ndarray:
    """Prediction in physical units: one rollout step or the rescaled steady map."""

    if model.residual_scale is not None:
        return rollout(model, x, 1)[:, 1]
    return predict(model, x)
