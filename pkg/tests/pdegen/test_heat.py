"""Tests for the heat equation generator."""

import numpy as np
import pytest

from neuralhss.exceptions.generation_exception import GenerationExceptionError
from neuralhss.pdegen.grid import unit_grid
from neuralhss.pdegen.heat import (
    gen_heat_1d,
    heat_crank_nicolson,
    heat_spectral,
    sample_count,
)


def test_spectral_mode_decay():
    """A single mode decays as exp(-kappa k^2 pi^2 t)."""

    x = unit_grid(33)
    times = np.array([0.0, 0.5])

    u = heat_spectral(np.array([0.0, 1.0]), x, times, kappa=0.1)

    assert u.shape == (1, 2, 33)
    np.testing.assert_allclose(
        u[0, 1], np.exp(-0.1 * 4.0 * np.pi**2 * 0.5) * np.sin(2.0 * np.pi * x), atol=1e-14
    )


def test_crank_nicolson_agrees_with_spectral():
    """Finite differences reproduce the exact trajectory."""

    x = unit_grid(257)
    amplitudes = np.array([1.0, 0.5, 0.25])
    times = 0.05 * np.arange(5)
    exact = heat_spectral(amplitudes, x, times, kappa=0.002)[0]

    states = heat_crank_nicolson(exact[0], 0.002, 0.05, 4)

    assert states.shape == (5, 257)
    assert np.max(np.abs(states - exact)) < 1e-4


def test_gen_heat_1d():
    """Trajectories start at unit peak and lose energy every step."""

    # Call the method
    data = gen_heat_1d(
        2, seed=0, grid_points=65, output_points=65, kappa=0.01, horizon=1.0, time_step=0.2, modes=4
    )

    # Verify results
    assert data.states.shape == (2, 6, 65)
    assert data.time_step == 0.2
    np.testing.assert_allclose(np.max(np.abs(data.states[:, 0]), axis=1), 1.0)
    energy = np.sum(data.states**2, axis=2)
    assert np.all(np.diff(energy, axis=1) < 0.0)
    assert np.all(data.states[:, :, [0, -1]] == 0.0)


def test_gen_heat_1d_downsampled():
    """Output points stride the solve grid."""

    data = gen_heat_1d(1, seed=3, grid_points=128, output_points=32, horizon=0.4)
    assert data.states.shape == (1, 3, 32)
    assert data.grid.factors == (4,)


@pytest.mark.parametrize(("horizon", "time_step"), [(1.0, 0.3), (0.1, 0.2)])
def test_sample_count_needs_whole_intervals(horizon, time_step):
    """The horizon must be a positive multiple of the time step."""

    with pytest.raises(GenerationExceptionError):
        sample_count(horizon, time_step)


def test_sample_count():
    """Floating point multiples are recognised."""

    assert sample_count(8.0, 0.2) == 40
