"""Tests for the cosine schedule and gradient clipping."""

import numpy as np
import pytest

from neuralhss.models.model_network import GradientSet
from neuralhss.optim.schedule import clip_global_norm, cosine_lr


def test_cosine_endpoints_are_exact():
    """Peak at step 0, minimum at the last step, midpoint halfway."""

    assert cosine_lr(0, 100, 1e-3, 1e-5) == 1e-3
    assert cosine_lr(100, 100, 1e-3, 1e-5) == 1e-5
    assert cosine_lr(50, 100, 1.0, 0.0) == pytest.approx(0.5)


def test_cosine_is_monotone():
    """The rate never increases."""

    rates = [cosine_lr(step, 40, 1e-2, 1e-4) for step in range(41)]
    assert all(a >= b for a, b in zip(rates, rates[1:], strict=False))


@pytest.mark.parametrize(("step", "total"), [(-1, 10), (11, 10), (0, -1)])
def test_cosine_out_of_range(step, total):
    """Steps outside [0, total] are rejected."""

    with pytest.raises(ValueError):
        cosine_lr(step, total, 1.0, 0.0)


def test_clip_scales_to_max_norm():
    """Large gradients are rescaled to the cap, direction kept."""

    grads = GradientSet({"a": np.array([6.0]), "b": np.array([8.0])})

    clipped = clip_global_norm(grads, 1.0)

    assert clipped.global_norm() == pytest.approx(1.0)
    np.testing.assert_allclose(clipped.blocks["a"], [0.6])


def test_clip_leaves_small_gradients():
    """Below the cap, or with clipping disabled, nothing changes."""

    grads = GradientSet({"a": np.array([0.3])})
    assert clip_global_norm(grads, 1.0) is grads

    large = GradientSet({"a": np.array([30.0])})
    assert clip_global_norm(large, 0.0) is large
