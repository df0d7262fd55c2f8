# ruff: noqa: TID252
"""Heat equation u_t = kappa u_xx on [0, 1] with homogeneous Dirichlet data."""

import logging

import numpy as np
from scipy.linalg import solve_banded

from ..const import (
    HEAT_GRID_POINTS,
    HEAT_HORIZON,
    HEAT_KAPPA,
    HEAT_ORACLE_STEP,
    HEAT_OUTPUT_POINTS,
    HEAT_TIME_STEP,
    SEED_STREAM_HEAT_1D,
    SOURCE_MODES,
    VERSION,
    Equation,
)
from ..exceptions.generation_exception import GenerationExceptionError
from ..helpers.utils import derive_rng
from ..models.model_dataset import GridSpec, TrajectoryDataset
from .grid import downsample, unit_grid
from .poisson import sine_basis

# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
_LOGGER = logging.getLogger(__name__)


# ----------------------------------------------------------------------------
def sample_count(horizon: float, time_step: float) -> int:
    """Number of sampling intervals T / dt; must be a whole number."""

    intervals = round(horizon / time_step)
    if intervals < 1 or abs(intervals * time_step - horizon) > 1e-9 * horizon:
        msg = f"Horizon {horizon} is not a multiple of the time step {time_step}"
        raise GenerationExceptionError(msg)
    return intervals


# ----------------------------------------------------------------------------
def heat_spectral(
    amplitudes: np.ndarray, x: np.ndarray, times: np.ndarray, kappa: float
) -> np.ndarray:
    """Exact solution of u_0 = sum_k a_k sin(k pi x): shape (n, len(times), len(x)).

    Mode k decays as exp(-kappa k^2 pi^2 t).
    """

    modes = amplitudes.shape[-1]
    k = np.arange(1, modes + 1, dtype=float)
    decay = np.exp(-kappa * (k * np.pi) ** 2 * times[:, None])
    return np.einsum(
        "nk,tk,kp->ntp", np.atleast_2d(amplitudes), decay, sine_basis(modes, x, 1.0)
    )


# ----------------------------------------------------------------------------
def heat_crank_nicolson(
    u0: np.ndarray,
    kappa: float,
    time_step: float,
    steps: int,
    dt: float = HEAT_ORACLE_STEP,
) -> np.ndarray:
    """Second-order finite differences with Crank-Nicolson stepping.

    Returns the states at multiples of time_step, shape (steps + 1, len(u0)).
    """

    points = u0.shape[0]
    h = 1.0 / (points - 1)
    substeps = max(1, round(time_step / dt))
    dt = time_step / substeps
    ratio = 0.5 * kappa * dt / (h * h)

    interior = points - 2
    banded = np.empty((3, interior))
    banded[0] = -ratio
    banded[1] = 1.0 + 2.0 * ratio
    banded[2] = -ratio

    states = np.zeros((steps + 1, points))
    states[0] = u0
    current = np.array(u0[1:-1], dtype=float)
    for j in range(1, steps + 1):
        for _ in range(substeps):
            explicit = (1.0 - 2.0 * ratio) * current
            explicit[1:] += ratio * current[:-1]
            explicit[:-1] += ratio * current[1:]
            current = solve_banded((1, 1), banded, explicit)
        states[j, 1:-1] = current
    return states


# ----------------------------------------------------------------------------
def gen_heat_1d(
    n_traj: int,
    seed: int,
    grid_points: int = HEAT_GRID_POINTS,
    output_points: int = HEAT_OUTPUT_POINTS,
    kappa: float = HEAT_KAPPA,
    horizon: float = HEAT_HORIZON,
    time_step: float = HEAT_TIME_STEP,
    modes: int = SOURCE_MODES,
) -> TrajectoryDataset:
    """Trajectories from u_0 = sum_k 2 c_k sin(k pi x), c_k ~ U(0, 1).

    u_0 is scaled so that its stored samples have max |u_0| = 1; the trajectory
    is the exact spectral solution sampled every time_step.
    """

    if n_traj < 1:
        msg = f"heat1d: trajectory count must be >= 1, got {n_traj}"
        raise GenerationExceptionError(msg)

    grid = GridSpec((output_points,), (grid_points,))
    intervals = sample_count(horizon, time_step)
    times = time_step * np.arange(intervals + 1)
    amplitudes = np.stack(
        [
            2.0 * derive_rng(seed, SEED_STREAM_HEAT_1D, i).uniform(0.0, 1.0, size=modes)
            for i in range(n_traj)
        ]
    )

    full = heat_spectral(amplitudes, unit_grid(grid_points), times, kappa)
    full[:, :, 0] = 0.0
    full[:, :, -1] = 0.0
    states = downsample(full, grid.factors)
    peaks = np.max(np.abs(states[:, 0, :]), axis=1)
    states /= peaks[:, None, None]

    dataset = TrajectoryDataset(
        states,
        time_step,
        grid,
        {
            "equation": Equation.HEAT_1D.value,
            "seed": seed,
            "modes": modes,
            "kappa": kappa,
            "horizon": horizon,
            "solver": "spectral",
            "generator_version": VERSION,
        },
    )
    _LOGGER.info("gen_heat_1d: %s", dataset)
    return dataset
