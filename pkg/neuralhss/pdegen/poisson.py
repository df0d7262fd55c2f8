# ruff: noqa: TID252
"""Poisson datasets: -Laplace(u) = f with homogeneous Dirichlet data on the unit cube."""

import logging

import numpy as np
from scipy import sparse
from scipy.linalg import LinAlgError, solve_banded
from scipy.sparse.linalg import splu

from ..const import (
    POISSON_1D_CLOSURE,
    POISSON_1D_GRID_POINTS,
    POISSON_1D_OUTPUT_POINTS,
    POISSON_1D_ZEROED_POINTS,
    POISSON_2D_GRID_POINTS,
    POISSON_2D_OUTPUT_POINTS,
    POISSON_2D_STENCIL,
    POISSON_3D_GRID_POINTS,
    POISSON_3D_MODES,
    POISSON_3D_STENCIL,
    RESIDUAL_TOLERANCE_POISSON,
    SEED_STREAM_POISSON_1D,
    SEED_STREAM_POISSON_2D,
    SEED_STREAM_POISSON_3D,
    SOURCE_MODES,
    VERSION,
    Equation,
)
from ..exceptions.generation_exception import GenerationExceptionError
from ..helpers.utils import derive_rng
from ..models.model_dataset import Dataset, GridSpec
from .grid import downsample, unit_grid

# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
_LOGGER = logging.getLogger(__name__)

# Fourth-order central second difference, sign flipped for -u''.
_CENTRAL = np.array([1.0, -16.0, 30.0, -16.0, 1.0])
# Third-order one-sided closure for -u'' at the first interior node, u_0..u_4.
_CLOSURE = np.array([-11.0, 20.0, -6.0, -4.0, 1.0])
_BANDS = 3


# ----------------------------------------------------------------------------
# Shared
# ----------------------------------------------------------------------------
def sine_basis(modes: int, x: np.ndarray, frequency: float = 2.0) -> np.ndarray:
    """Rows sin(frequency * k * pi * x) for k = 1..modes."""

    k = np.arange(1, modes + 1, dtype=float)[:, None]
    return np.sin(frequency * np.pi * k * x[None, :])


# ----------------------------------------------------------------------------
def relative_residuals(
    operator: sparse.spmatrix, u: np.ndarray, rhs: np.ndarray
) -> np.ndarray:
    """||A u - rhs|| / ||rhs|| per column; the absolute residual for a zero rhs."""

    residual = np.linalg.norm(operator @ u - rhs, axis=0)
    scale = np.linalg.norm(rhs, axis=0)
    return np.where(scale > 0, residual / np.where(scale > 0, scale, 1.0), residual)


# ----------------------------------------------------------------------------
def _check_residuals(residuals: np.ndarray, equation: str) -> float:
    worst = int(np.argmax(residuals))
    if residuals[worst] > RESIDUAL_TOLERANCE_POISSON or not np.isfinite(residuals[worst]):
        _LOGGER.error("%s: residual %.3e at sample %s", equation, residuals[worst], worst)
        msg = f"{equation}: discrete residual {residuals[worst]:.3e} above tolerance"
        raise GenerationExceptionError(msg, worst)
    return float(residuals[worst])


# ----------------------------------------------------------------------------
# 1D
# ----------------------------------------------------------------------------
def _poisson_1d_entries(points: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(rows, cols, values) of the 1D operator including Dirichlet rows."""

    if points < 7:
        msg = f"poisson1d needs at least 7 grid points, got {points}"
        raise GenerationExceptionError(msg)

    h = 1.0 / (points - 1)
    scale = 1.0 / (12.0 * h * h)
    rows: list[np.ndarray] = [np.array([0, points - 1])]
    cols: list[np.ndarray] = [np.array([0, points - 1])]
    values: list[np.ndarray] = [np.ones(2)]

    # Near-boundary rows and their mirror images.
    rows += [np.full(5, 1), np.full(5, points - 2)]
    cols += [np.arange(5), points - 1 - np.arange(5)]
    values += [_CLOSURE * scale, _CLOSURE * scale]

    interior = np.arange(2, points - 2)
    for offset, coefficient in zip(range(-2, 3), _CENTRAL, strict=True):
        rows.append(interior)
        cols.append(interior + offset)
        values.append(np.full(interior.size, coefficient * scale))

    return np.concatenate(rows), np.concatenate(cols), np.concatenate(values)


# ----------------------------------------------------------------------------
def poisson_1d_operator(points: int) -> sparse.csr_matrix:
    """Five-point fourth-order -d^2/dx^2 with identity rows at x = 0 and x = 1."""

    rows, cols, values = _poisson_1d_entries(points)
    return sparse.coo_matrix((values, (rows, cols)), shape=(points, points)).tocsr()


# ----------------------------------------------------------------------------
def solve_poisson_1d(f: np.ndarray) -> np.ndarray:
    """Solve the banded 1D system for every column of f (points,) or (points, n).

    Entries of f at the two boundary nodes are replaced by the Dirichlet value 0.
    """

    points = f.shape[0]
    rows, cols, values = _poisson_1d_entries(points)
    banded = np.zeros((2 * _BANDS + 1, points))
    np.add.at(banded, (_BANDS + rows - cols, cols), values)

    rhs = np.array(f, dtype=float)
    rhs[0] = 0.0
    rhs[-1] = 0.0
    try:
        return solve_banded((_BANDS, _BANDS), banded, rhs)
    except (LinAlgError, ValueError) as ex:
        msg = f"poisson1d: banded solve failed: {ex}"
        raise GenerationExceptionError(msg) from ex


# ----------------------------------------------------------------------------
def gen_poisson_1d(
    n: int,
    seed: int,
    grid_points: int = POISSON_1D_GRID_POINTS,
    output_points: int = POISSON_1D_OUTPUT_POINTS,
    modes: int = SOURCE_MODES,
) -> Dataset:
    """Pairs (f, u) with f = sum_k c_k sin(2 k pi x), c_k ~ U(0, 1)."""

    if n < 1:
        msg = f"poisson1d: sample count must be >= 1, got {n}"
        raise GenerationExceptionError(msg)

    grid = GridSpec((output_points,), (grid_points,))
    basis = sine_basis(modes, unit_grid(grid_points))
    coefficients = np.stack(
        [
            derive_rng(seed, SEED_STREAM_POISSON_1D, i).uniform(0.0, 1.0, size=modes)
            for i in range(n)
        ]
    )
    f = coefficients @ basis
    f[:, :POISSON_1D_ZEROED_POINTS] = 0.0
    f[:, grid_points - POISSON_1D_ZEROED_POINTS :] = 0.0

    u = solve_poisson_1d(f.T)
    worst = _check_residuals(
        relative_residuals(poisson_1d_operator(grid_points), u, f.T),
        Equation.POISSON_1D.value,
    )

    dataset = Dataset(
        downsample(f, grid.factors),
        downsample(u.T, grid.factors),
        grid,
        {
            "equation": Equation.POISSON_1D.value,
            "seed": seed,
            "modes": modes,
            "zeroed_points": POISSON_1D_ZEROED_POINTS,
            "stencil": "five_point_fourth_order",
            "closure": POISSON_1D_CLOSURE,
            "max_residual": worst,
            "generator_version": VERSION,
        },
    )
    _LOGGER.info("gen_poisson_1d: %s, max_residual=%.3e", dataset, worst)
    return dataset


# ----------------------------------------------------------------------------
# 2D
# ----------------------------------------------------------------------------
def _shift_sum(size: int) -> sparse.csr_matrix:
    """Sum of the two nearest neighbours along one interior axis."""
    return sparse.diags([1.0, 1.0], [-1, 1], shape=(size, size), format="csr")


# ----------------------------------------------------------------------------
def poisson_2d_operator(points: int) -> tuple[sparse.csc_matrix, sparse.csr_matrix]:
    """Nine-point compact operator A and its right-hand-side weights B.

    Both act on the (points - 2)^2 interior nodes in row-major order:
    A u = (20 u - 4 edges - corners) / (6 h^2), B f = (8 f + edges) / 12.
    """

    size = points - 2
    h = 1.0 / (points - 1)
    shift = _shift_sum(size)
    eye = sparse.identity(size, format="csr")
    edges = sparse.kron(shift, eye) + sparse.kron(eye, shift)
    corners = sparse.kron(shift, shift)
    eye2 = sparse.identity(size * size, format="csr")

    operator = (20.0 * eye2 - 4.0 * edges - corners) / (6.0 * h * h)
    weights = (8.0 * eye2 + edges) / 12.0
    return operator.tocsc(), weights.tocsr()


# ----------------------------------------------------------------------------
def _interior_solve(
    operator: sparse.csc_matrix,
    weights: sparse.csr_matrix,
    f: np.ndarray,
    equation: str,
) -> tuple[np.ndarray, float]:
    """Solve for a batch f (n, P, ..., P); return u with zero boundary and the worst residual."""

    n = f.shape[0]
    spatial = f.shape[1:]
    inner = tuple(slice(1, -1) for _ in spatial)
    rhs = weights @ f[(slice(None), *inner)].reshape(n, -1).T

    try:
        solution = splu(operator).solve(rhs)
    except RuntimeError as ex:
        msg = f"{equation}: sparse factorization failed: {ex}"
        raise GenerationExceptionError(msg) from ex

    worst = _check_residuals(relative_residuals(operator, solution, rhs), equation)
    u = np.zeros_like(f)
    u[(slice(None), *inner)] = solution.T.reshape(n, *(p - 2 for p in spatial))
    return u, worst


# ----------------------------------------------------------------------------
def solve_poisson_2d(f: np.ndarray) -> np.ndarray:
    """Solve for a batch of sources f (n, P, P); boundary values of f are ignored."""

    operator, weights = poisson_2d_operator(f.shape[-1])
    u, _ = _interior_solve(operator, weights, f, Equation.POISSON_2D.value)
    return u


# ----------------------------------------------------------------------------
def _zero_boundary(f: np.ndarray) -> None:
    for axis in range(1, f.ndim):
        index: list = [slice(None)] * f.ndim
        for edge in (0, -1):
            index[axis] = edge
            f[tuple(index)] = 0.0


# ----------------------------------------------------------------------------
def gen_poisson_2d(
    n: int,
    seed: int,
    grid_points: int = POISSON_2D_GRID_POINTS,
    output_points: int = POISSON_2D_OUTPUT_POINTS,
    modes: int = SOURCE_MODES,
) -> Dataset:
    """Pairs (f, u) with f a random sum of sin(2 pi kx x) sin(2 pi ky y) modes.

    Every sample draws its own mode counts Kx, Ky in 1..modes and coefficients
    c ~ U(0, 1) for kx <= Kx, ky <= Ky.
    """

    if n < 1:
        msg = f"poisson2d: sample count must be >= 1, got {n}"
        raise GenerationExceptionError(msg)

    grid = GridSpec((output_points,) * 2, (grid_points,) * 2)
    basis = sine_basis(modes, unit_grid(grid_points))
    f = np.empty((n, grid_points, grid_points))
    for i in range(n):
        rng = derive_rng(seed, SEED_STREAM_POISSON_2D, i)
        kx, ky = rng.integers(1, modes + 1, size=2)
        coefficients = np.zeros((modes, modes))
        coefficients[:kx, :ky] = rng.uniform(0.0, 1.0, size=(kx, ky))
        f[i] = basis.T @ coefficients @ basis
    _zero_boundary(f)

    operator, weights = poisson_2d_operator(grid_points)
    u, worst = _interior_solve(operator, weights, f, Equation.POISSON_2D.value)

    dataset = Dataset(
        downsample(f, grid.factors),
        downsample(u, grid.factors),
        grid,
        {
            "equation": Equation.POISSON_2D.value,
            "seed": seed,
            "modes": modes,
            "stencil": POISSON_2D_STENCIL,
            "max_residual": worst,
            "generator_version": VERSION,
        },
    )
    _LOGGER.info("gen_poisson_2d: %s, max_residual=%.3e", dataset, worst)
    return dataset


# ----------------------------------------------------------------------------
# 3D
# ----------------------------------------------------------------------------
def poisson_3d_operator(points: int) -> tuple[sparse.csc_matrix, sparse.csr_matrix]:
    """Nineteen-point compact operator and its right-hand-side weights.

    A u = (24 u - 2 faces - edges) / (6 h^2), B f = (6 f + faces) / 12.
    """

    size = points - 2
    h = 1.0 / (points - 1)
    shift = _shift_sum(size)
    eye = sparse.identity(size, format="csr")

    def kron3(a, b, c) -> sparse.csr_matrix:
        return sparse.kron(sparse.kron(a, b), c, format="csr")

    faces = kron3(shift, eye, eye) + kron3(eye, shift, eye) + kron3(eye, eye, shift)
    edges = kron3(shift, shift, eye) + kron3(shift, eye, shift) + kron3(eye, shift, shift)
    eye3 = sparse.identity(size**3, format="csr")

    operator = (24.0 * eye3 - 2.0 * faces - edges) / (6.0 * h * h)
    weights = (6.0 * eye3 + faces) / 12.0
    return operator.tocsc(), weights.tocsr()


# ----------------------------------------------------------------------------
def gen_poisson_3d(
    n: int,
    seed: int,
    grid_points: int = POISSON_3D_GRID_POINTS,
    output_points: int = POISSON_3D_GRID_POINTS,
    modes: int = POISSON_3D_MODES,
) -> Dataset:
    """Small 3D smoke dataset on the nineteen-point compact stencil."""

    if n < 1:
        msg = f"poisson3d: sample count must be >= 1, got {n}"
        raise GenerationExceptionError(msg)

    grid = GridSpec((output_points,) * 3, (grid_points,) * 3)
    basis = sine_basis(modes, unit_grid(grid_points))
    f = np.empty((n, grid_points, grid_points, grid_points))
    for i in range(n):
        rng = derive_rng(seed, SEED_STREAM_POISSON_3D, i)
        counts = rng.integers(1, modes + 1, size=3)
        coefficients = np.zeros((modes,) * 3)
        coefficients[: counts[0], : counts[1], : counts[2]] = rng.uniform(
            0.0, 1.0, size=tuple(counts)
        )
        f[i] = np.einsum("abc,ai,bj,ck->ijk", coefficients, basis, basis, basis)
    _zero_boundary(f)

    operator, weights = poisson_3d_operator(grid_points)
    u, worst = _interior_solve(operator, weights, f, Equation.POISSON_3D.value)

    dataset = Dataset(
        downsample(f, grid.factors),
        downsample(u, grid.factors),
        grid,
        {
            "equation": Equation.POISSON_3D.value,
            "seed": seed,
            "modes": modes,
            "stencil": POISSON_3D_STENCIL,
            "max_residual": worst,
            "generator_version": VERSION,
        },
    )
    _LOGGER.info("gen_poisson_3d: %s, max_residual=%.3e", dataset, worst)
    return dataset
