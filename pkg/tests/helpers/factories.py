"""Small models and datasets for tests."""

import numpy as np

from neuralhss.models.model_dataset import Dataset, GridSpec, TrajectoryDataset
from neuralhss.neural.network import build_hss_model, build_nd_hss_model


def tiny_hss_model(seed: int = 3, depth: int = 2, final_activation: bool = False):
    """Two-layer model on d=16 with L=2, r=2 and non-trivial slopes."""

    model = build_hss_model(16, 2, 2, depth, seed, final_activation=final_activation)
    for layer in model.layers:
        layer.alpha[:] = 0.5
    return model


def tiny_nd_model(seed: int = 3):
    """Single 2D layer on an 8 x 8 grid with L=1, r=2 and two separable terms."""

    model = build_nd_hss_model(8, 2, 1, 2, 2, 1, seed, final_activation=True)
    model.layers[0].alpha[:] = 0.5
    return model


def pair_dataset(count: int = 6, extent: int = 16, seed: int = 0) -> Dataset:
    """Random pairs where the target is a fixed linear map of the input."""

    rng = np.random.default_rng(seed)
    inputs = rng.standard_normal((count, extent))
    operator = np.tril(np.ones((extent, extent))) / extent
    return Dataset(
        inputs,
        inputs @ operator.T,
        GridSpec((extent,), (extent,)),
        {"equation": "poisson1d", "seed": seed},
    )


def decay_trajectories(count: int = 4, steps: int = 5, extent: int = 16) -> TrajectoryDataset:
    """Trajectories u_t = 0.9^t u_0 with sine initial states."""

    x = np.linspace(0.0, 1.0, extent)
    amplitudes = np.arange(1, count + 1, dtype=float)[:, None]
    u0 = np.sin(np.pi * amplitudes * x[None, :])
    decay = 0.9 ** np.arange(steps, dtype=float)
    states = decay[None, :, None] * u0[:, None, :]
    return TrajectoryDataset(
        states, 0.2, GridSpec((extent,), (extent,)), {"equation": "heat1d"}
    )
