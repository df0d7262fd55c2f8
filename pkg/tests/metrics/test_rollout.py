"""Tests for the residual-learning protocol."""

import numpy as np
import pytest

from neuralhss.exceptions.metric_exception import MetricExceptionError
from neuralhss.hss.hss_ops import hss_zeros
from neuralhss.metrics.rollout import (
    build_step_pairs,
    predict_rescaled,
    residual_scale,
    rollout,
)
from neuralhss.models.model_hss import ClusterTree
from neuralhss.models.model_network import HssLinearLayer, NeuralHssModel
from neuralhss.neural.network import predict

from tests.helpers.factories import decay_trajectories, tiny_hss_model


def _scaling_model(factor: float) -> NeuralHssModel:
    """Linear model u -> factor * u on 16 points."""

    weight = hss_zeros(ClusterTree(16, 2), 2)
    weight.levels[0].d[...] = factor * np.eye(4)
    return NeuralHssModel([HssLinearLayer(weight, np.ones(1), use_activation=False)])


def test_step_pairs():
    """Every consecutive state pair becomes one sample."""

    states = decay_trajectories(count=3, steps=4).states

    inputs, deltas = build_step_pairs(states)

    assert inputs.shape == (9, 16)
    np.testing.assert_array_equal(inputs[4], states[1, 1])
    np.testing.assert_array_equal(deltas[4], states[1, 2] - states[1, 1])


def test_step_pairs_need_two_states():
    """Single-state trajectories have no steps."""

    with pytest.raises(MetricExceptionError):
        build_step_pairs(np.zeros((2, 1, 8)))


def test_residual_scale():
    """Largest absolute residual, or one when all vanish."""

    assert residual_scale(np.array([[0.5, -2.0]])) == 2.0
    assert residual_scale(np.zeros((2, 3))) == 1.0


def test_rollout_reproduces_exact_decay():
    """A model predicting (0.9 - 1) u / s rolls out u_t = 0.9^t u_0."""

    data = decay_trajectories(count=2, steps=5)
    model = _scaling_model(-0.1 / 0.05)
    model.residual_scale = 0.05

    states = rollout(model, data.states[:, 0], 4)

    assert states.shape == (2, 5, 16)
    np.testing.assert_array_equal(states[:, 0], data.states[:, 0])
    np.testing.assert_allclose(states, data.states, atol=1e-12)


def test_rollout_needs_residual_scale():
    """Steady models cannot be rolled out."""

    with pytest.raises(MetricExceptionError):
        rollout(tiny_hss_model(), np.zeros((1, 16)), 2)


def test_predict_rescaled(rng):
    """Residual models step once; steady models use predict."""

    x = rng.standard_normal((3, 16))

    model = _scaling_model(2.0)
    model.residual_scale = 0.5
    np.testing.assert_allclose(predict_rescaled(model, x), 2.0 * x)

    steady = tiny_hss_model()
    np.testing.assert_array_equal(predict_rescaled(steady, x), predict(steady, x))
