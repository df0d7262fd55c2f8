# ruff: noqa: TID252
"""Viscous Burgers equation u_t + beta (u^2 / 2)_x = nu u_xx on [0, 1], u = 0 at both ends."""

import logging

import numpy as np
from scipy.linalg import LinAlgError, solve_banded

from ..const import (
    BURGERS_BETA,
    BURGERS_GRID_POINTS,
    BURGERS_HORIZON,
    BURGERS_NU,
    BURGERS_OUTPUT_POINTS,
    BURGERS_SUBSTEPS,
    BURGERS_TIME_STEP,
    NEWTON_MAX_ITERATIONS,
    NEWTON_TOLERANCE,
    SEED_STREAM_BURGERS_1D,
    SOURCE_MODES,
    VERSION,
    Equation,
)
from ..exceptions.generation_exception import GenerationExceptionError
from ..helpers.utils import derive_rng
from ..models.model_dataset import GridSpec, TrajectoryDataset
from .grid import downsample, unit_grid
from .heat import sample_count

# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
_LOGGER = logging.getLogger(__name__)


# ----------------------------------------------------------------------------
def _tendency(u: np.ndarray, h: float, nu: float, beta: float) -> np.ndarray:
    """Semi-discrete right-hand side at the interior nodes of the full state u."""

    left, mid, right = u[:-2], u[1:-1], u[2:]
    return -beta * (right * right - left * left) / (4.0 * h) + nu * (
        right - 2.0 * mid + left
    ) / (h * h)


# ----------------------------------------------------------------------------
def _trapezoidal_step(
    u: np.ndarray,
    dt: float,
    h: float,
    nu: float,
    beta: float,
    index: int | None,
) -> np.ndarray:
    """One implicit trapezoidal step solved by Newton with a tridiagonal Jacobian."""

    half = 0.5 * dt
    known = u[1:-1] + half * _tendency(u, h, nu, beta)
    guess = u.copy()
    diffusion = nu / (h * h)
    banded = np.empty((3, u.size - 2))
    banded[1] = 1.0 + half * 2.0 * diffusion

    for _ in range(NEWTON_MAX_ITERATIONS):
        residual = guess[1:-1] - half * _tendency(guess, h, nu, beta) - known
        interior = guess[1:-1]
        # Column j of the Jacobian only depends on the unknown u_j.
        banded[0] = -half * (diffusion - beta * interior / (2.0 * h))
        banded[2] = -half * (diffusion + beta * interior / (2.0 * h))
        try:
            delta = solve_banded((1, 1), banded, -residual)
        except (LinAlgError, ValueError) as ex:
            msg = f"burgers1d: Newton system is singular: {ex}"
            raise GenerationExceptionError(msg, index) from ex

        guess[1:-1] += delta
        if np.max(np.abs(delta)) <= NEWTON_TOLERANCE * max(1.0, np.max(np.abs(guess))):
            return guess

    _LOGGER.error("burgers1d: Newton did not converge for trajectory %s", index)
    msg = f"burgers1d: Newton did not converge in {NEWTON_MAX_ITERATIONS} iterations"
    raise GenerationExceptionError(msg, index)


# ----------------------------------------------------------------------------
def integrate_burgers(
    u0: np.ndarray,
    nu: float = BURGERS_NU,
    beta: float = BURGERS_BETA,
    time_step: float = BURGERS_TIME_STEP,
    steps: int = 1,
    substeps: int = BURGERS_SUBSTEPS,
    index: int | None = None,
) -> np.ndarray:
    """States at multiples of time_step, shape (steps + 1, len(u0)).

    u0 lives on equispaced nodes including both ends; its end values are
    replaced by the Dirichlet value 0.
    """

    h = 1.0 / (u0.shape[0] - 1)
    dt = time_step / substeps
    current = np.array(u0, dtype=float)
    current[0] = 0.0
    current[-1] = 0.0

    states = np.empty((steps + 1, current.size))
    states[0] = current
    for j in range(1, steps + 1):
        for _ in range(substeps):
            current = _trapezoidal_step(current, dt, h, nu, beta, index)
        states[j] = current
    return states


# ----------------------------------------------------------------------------
def gen_burgers_1d(
    n_traj: int,
    seed: int,
    grid_points: int = BURGERS_GRID_POINTS,
    output_points: int = BURGERS_OUTPUT_POINTS,
    nu: float = BURGERS_NU,
    beta: float = BURGERS_BETA,
    horizon: float = BURGERS_HORIZON,
    time_step: float = BURGERS_TIME_STEP,
    substeps: int = BURGERS_SUBSTEPS,
    modes: int = SOURCE_MODES,
) -> TrajectoryDataset:
    """Trajectories from u_0 = sum_k c_k sin(2 pi (k + 1) x), c_k ~ U(-1, 1).

    u_0 is scaled so that its stored samples have max |u_0| = 1.
    """

    if n_traj < 1:
        msg = f"burgers1d: trajectory count must be >= 1, got {n_traj}"
        raise GenerationExceptionError(msg)

    grid = GridSpec((output_points,), (grid_points,))
    intervals = sample_count(horizon, time_step)
    x = unit_grid(grid_points)
    k = np.arange(1, modes + 1, dtype=float)[:, None]
    basis = np.sin(2.0 * np.pi * (k + 1.0) * x[None, :])

    states = np.empty((n_traj, intervals + 1, output_points))
    for i in range(n_traj):
        coefficients = derive_rng(seed, SEED_STREAM_BURGERS_1D, i).uniform(
            -1.0, 1.0, size=modes
        )
        u0 = coefficients @ basis
        u0[0] = 0.0
        u0[-1] = 0.0
        u0 /= np.max(np.abs(downsample(u0, grid.factors)))

        trajectory = integrate_burgers(
            u0, nu, beta, time_step, intervals, substeps, index=i
        )
        states[i] = downsample(trajectory, grid.factors)
        if _LOGGER.isEnabledFor(logging.DEBUG):
            _LOGGER.debug(
                "gen_burgers_1d: trajectory %s, max |u(T)|=%.4f",
                i,
                np.max(np.abs(trajectory[-1])),
            )

    dataset = TrajectoryDataset(
        states,
        time_step,
        grid,
        {
            "equation": Equation.BURGERS_1D.value,
            "seed": seed,
            "modes": modes,
            "nu": nu,
            "beta": beta,
            "horizon": horizon,
            "substeps": substeps,
            "solver": "trapezoidal_newton",
            "generator_version": VERSION,
        },
    )
    _LOGGER.info("gen_burgers_1d: %s", dataset)
    return dataset
