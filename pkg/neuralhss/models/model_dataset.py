# ruff: noqa: TID252
"""Grid and dataset data model."""

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from ..exceptions.structure_exception import StructureExceptionError


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
@dataclass
class GridSpec:
    """Uniform tensor grid of the stored samples and of the generating solve."""

    # Stored extent per mode, after downsampling.
    extents: tuple[int, ...]
    # Extent per mode of the grid the samples were generated on.
    generation_extents: tuple[int, ...]
    # (lower, upper) per mode.
    bounds: tuple[tuple[float, float], ...] = ()

    # ----------------------------------------------------------------------------
    def __post_init__(self) -> None:
        """Check extents and fill unit bounds."""

        self.extents = tuple(int(e) for e in self.extents)
        self.generation_extents = tuple(int(e) for e in self.generation_extents)
        if not self.bounds:
            self.bounds = tuple((0.0, 1.0) for _ in self.extents)
        self.bounds = tuple((float(lo), float(hi)) for lo, hi in self.bounds)

        if len(self.extents) != len(self.generation_extents) or len(
            self.extents
        ) != len(self.bounds):
            msg = f"Grid modes disagree: {self.extents}, {self.generation_extents}"
            raise StructureExceptionError(msg)

        for out, gen in zip(self.extents, self.generation_extents, strict=True):
            if out < 2 or gen < out or gen % out != 0:
                msg = f"Grid extent {out} is not a stride subsample of {gen}"
                raise StructureExceptionError(msg)

    # ----------------------------------------------------------------------------
    @property
    def dims(self) -> int:
        """Number of spatial modes m."""
        return len(self.extents)

    @property
    def factors(self) -> tuple[int, ...]:
        """Downsampling stride per mode."""
        return tuple(
            gen // out
            for out, gen in zip(self.extents, self.generation_extents, strict=True)
        )

    @property
    def spacing(self) -> tuple[float, ...]:
        """Generation grid spacing h per mode; the grid includes both bounds."""
        return tuple(
            (hi - lo) / (gen - 1)
            for (lo, hi), gen in zip(self.bounds, self.generation_extents, strict=True)
        )

    # ----------------------------------------------------------------------------
    def to_dict(self) -> dict[str, Any]:
        """JSON friendly form."""
        return {
            "extents": list(self.extents),
            "generation_extents": list(self.generation_extents),
            "bounds": [list(b) for b in self.bounds],
        }

    # ----------------------------------------------------------------------------
    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "GridSpec":
        """Inverse of to_dict."""
        return cls(
            tuple(data["extents"]),
            tuple(data["generation_extents"]),
            tuple(tuple(b) for b in data["bounds"]),
        )


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
@dataclass
class Dataset:
    """Input/target sample pairs."""

    inputs: np.ndarray
    targets: np.ndarray
    grid: GridSpec
    # Equation name, physical constants, seeds, generator version, split indices.
    meta: dict[str, Any] = field(default_factory=dict)

    # ----------------------------------------------------------------------------
    def __post_init__(self) -> None:
        """Reject mismatched sample counts."""

        if self.inputs.shape[0] != self.targets.shape[0]:
            msg = (
                f"Dataset has {self.inputs.shape[0]} inputs but "
                f"{self.targets.shape[0]} targets"
            )
            raise StructureExceptionError(msg)

    @property
    def size(self) -> int:
        """Number of samples N."""
        return int(self.inputs.shape[0])

    # ----------------------------------------------------------------------------
    def arrays(self) -> dict[str, np.ndarray]:
        """Named arrays as stored on disk."""
        return {"inputs": self.inputs, "targets": self.targets}

    # ----------------------------------------------------------------------------
    def subset(self, indices: np.ndarray) -> "Dataset":
        """Samples at indices, with the indices recorded in meta."""
        return Dataset(
            self.inputs[indices],
            self.targets[indices],
            self.grid,
            {**self.meta, "indices": [int(i) for i in indices]},
        )

    # ----------------------------------------------------------------------------
    def __repr__(self) -> str:
        """Return string representation of Dataset."""
        return (
            f"equation={self.meta.get('equation')}, "
            f"inputs={self.inputs.shape}, "
            f"targets={self.targets.shape}"
        )


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
@dataclass
class TrajectoryDataset:
    """Sampled trajectories of a time-dependent equation."""

    # (N_traj, T_steps, *grid).
    states: np.ndarray
    time_step: float
    grid: GridSpec
    meta: dict[str, Any] = field(default_factory=dict)

    @property
    def size(self) -> int:
        """Number of trajectories."""
        return int(self.states.shape[0])

    @property
    def steps(self) -> int:
        """Number of stored states per trajectory."""
        return int(self.states.shape[1])

    # ----------------------------------------------------------------------------
    def arrays(self) -> dict[str, np.ndarray]:
        """Named arrays as stored on disk."""
        return {"states": self.states}

    # ----------------------------------------------------------------------------
    def subset(self, indices: np.ndarray) -> "TrajectoryDataset":
        """Trajectories at indices, with the indices recorded in meta."""
        return TrajectoryDataset(
            self.states[indices],
            self.time_step,
            self.grid,
            {**self.meta, "indices": [int(i) for i in indices]},
        )

    # ----------------------------------------------------------------------------
    def __repr__(self) -> str:
        """Return string representation of TrajectoryDataset."""
        return (
            f"equation={self.meta.get('equation')}, "
            f"states={self.states.shape}, "
            f"time_step={self.time_step}"
        )
