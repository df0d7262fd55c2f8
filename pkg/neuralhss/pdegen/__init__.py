"""Synthetic PDE and operator datasets."""

from .burgers import gen_burgers_1d, integrate_burgers
from .grid import downsample, split_indices, unit_grid
from .heat import gen_heat_1d, heat_crank_nicolson, heat_spectral
from .poisson import (
    gen_poisson_1d,
    gen_poisson_2d,
    gen_poisson_3d,
    poisson_1d_operator,
    poisson_2d_operator,
    poisson_3d_operator,
    relative_residuals,
    solve_poisson_1d,
    solve_poisson_2d,
)
from .recovery import gen_hss_recovery_dataset
from .storage import load_dataset, save_dataset

__all__ = [
    "downsample",
    "gen_burgers_1d",
    "gen_heat_1d",
    "gen_hss_recovery_dataset",
    "gen_poisson_1d",
    "gen_poisson_2d",
    "gen_poisson_3d",
    "heat_crank_nicolson",
    "heat_spectral",
    "integrate_burgers",
    "load_dataset",
    "poisson_1d_operator",
    "poisson_2d_operator",
    "poisson_3d_operator",
    "relative_residuals",
    "save_dataset",
    "solve_poisson_1d",
    "solve_poisson_2d",
    "split_indices",
    "unit_grid",
]
