"""Tests for the Burgers generator."""

import numpy as np
import pytest

from neuralhss.exceptions.generation_exception import GenerationExceptionError
from neuralhss.pdegen.burgers import gen_burgers_1d, integrate_burgers
from neuralhss.pdegen.grid import unit_grid


def test_zero_advection_is_the_heat_equation():
    """With beta = 0 a sine mode decays at the diffusive rate."""

    x = unit_grid(129)
    u0 = np.sin(np.pi * x)

    states = integrate_burgers(u0, nu=0.05, beta=0.0, time_step=0.1, steps=1, substeps=50)

    np.testing.assert_allclose(
        states[1], np.exp(-0.05 * np.pi**2 * 0.1) * u0, atol=1e-4
    )


def test_time_step_refinement():
    """More substeps change a smooth solution very little."""

    x = unit_grid(129)
    u0 = np.sin(2.0 * np.pi * x)

    coarse = integrate_burgers(u0, nu=0.02, beta=1.0, time_step=0.1, steps=2, substeps=10)
    fine = integrate_burgers(u0, nu=0.02, beta=1.0, time_step=0.1, steps=2, substeps=40)

    assert np.max(np.abs(coarse - fine)) < 1e-3


def test_zero_initial_condition_stays_zero():
    """u = 0 is a steady state for any viscosity and advection."""

    states = integrate_burgers(np.zeros(33), nu=0.01, beta=2.0, time_step=0.1, steps=3, substeps=5)

    assert states.shape == (4, 33)
    assert np.all(states == 0.0)


def test_point_antisymmetry_is_preserved():
    """An initial state with u(1 - x) = -u(x) keeps that symmetry."""

    x = unit_grid(65)
    u0 = np.sin(2.0 * np.pi * x) + 0.5 * np.sin(4.0 * np.pi * x)

    states = integrate_burgers(u0, nu=0.02, beta=1.0, time_step=0.1, steps=2, substeps=10)

    np.testing.assert_allclose(states[-1], -states[-1][::-1], atol=1e-10)


def test_gen_burgers_1d():
    """Unit initial peak, zero boundary values and no growth of the maximum."""

    # Call the method
    data = gen_burgers_1d(
        2,
        seed=0,
        grid_points=256,
        output_points=256,
        nu=0.01,
        horizon=0.4,
        time_step=0.2,
        substeps=40,
        modes=3,
    )

    # Verify results
    assert data.states.shape == (2, 3, 256)
    np.testing.assert_allclose(np.max(np.abs(data.states[:, 0]), axis=1), 1.0)
    assert np.all(data.states[:, :, [0, -1]] == 0.0)
    peaks = np.max(np.abs(data.states), axis=2)
    assert np.all(peaks[:, 1:] <= peaks[:, :1] + 1e-3)
    assert data.meta["solver"] == "trapezoidal_newton"


def test_gen_burgers_1d_rejects_empty():
    """At least one trajectory."""

    with pytest.raises(GenerationExceptionError):
        gen_burgers_1d(0, seed=0)
