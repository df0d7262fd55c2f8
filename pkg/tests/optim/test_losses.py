"""Tests for the loss and the slope penalty."""

import numpy as np
import pytest

from neuralhss.exceptions.structure_exception import StructureExceptionError
from neuralhss.optim.losses import alpha_penalty, mse_loss


def test_mse_loss_value_and_gradient():
    """Sum of squares over the batch size, gradient 2 diff / batch."""

    pred = np.array([[1.0, 2.0], [0.0, 0.0]])
    target = np.array([[0.0, 0.0], [0.0, 3.0]])

    value, grad = mse_loss(pred, target)

    assert value == pytest.approx((1.0 + 4.0 + 9.0) / 2.0)
    np.testing.assert_allclose(grad, [[1.0, 2.0], [0.0, -3.0]])


def test_mse_loss_shape_mismatch():
    """Prediction and target must agree."""

    with pytest.raises(StructureExceptionError):
        mse_loss(np.zeros((2, 3)), np.zeros((2, 4)))


def test_alpha_penalty():
    """lambda/2 sum (alpha - 1)^2 with gradient lambda (alpha - 1)."""

    value, grad = alpha_penalty([1.0, 3.0, 0.0], 2.0)

    assert value == pytest.approx(5.0)
    np.testing.assert_allclose(grad, [0.0, 4.0, -2.0])


def test_alpha_penalty_disabled_and_negative():
    """Zero coefficient contributes nothing; negative is an error."""

    value, grad = alpha_penalty([2.0, 0.5], 0.0)
    assert value == 0.0
    np.testing.assert_array_equal(grad, [0.0, 0.0])

    with pytest.raises(ValueError):
        alpha_penalty([1.0], -0.1)
