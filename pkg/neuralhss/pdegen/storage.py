# ruff: noqa: TID252
"""Dataset directory: manifest.json plus one raw float64 file per array."""

import logging
import math
from pathlib import Path
from typing import Any

import numpy as np

from ..const import FLOAT_DTYPE, SCHEMA_VERSION, TENSOR_SUFFIX, VERSION
from ..exceptions.artifact_exception import ArtifactExceptionError
from ..exceptions.structure_exception import StructureExceptionError
from ..models.model_dataset import Dataset, GridSpec, TrajectoryDataset
from ..neural.serialization import check_schema, read_manifest, write_manifest

# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
_LOGGER = logging.getLogger(__name__)

DATASET_KIND = "neuralhss-dataset"
FORMAT_PAIRS = "pairs"
FORMAT_TRAJECTORIES = "trajectories"


# ----------------------------------------------------------------------------
def save_dataset(ds: Dataset | TrajectoryDataset, path: str | Path) -> None:
    """Write ds below path; identical datasets give identical bytes."""

    path = Path(path)
    arrays = ds.arrays()
    manifest: dict[str, Any] = {
        "kind": DATASET_KIND,
        "schema_version": SCHEMA_VERSION,
        "generator_version": VERSION,
        "format": FORMAT_TRAJECTORIES
        if isinstance(ds, TrajectoryDataset)
        else FORMAT_PAIRS,
        "grid": ds.grid.to_dict(),
        "meta": ds.meta,
        "arrays": {
            name: {"file": f"{name}{TENSOR_SUFFIX}", "shape": list(array.shape)}
            for name, array in arrays.items()
        },
    }
    if isinstance(ds, TrajectoryDataset):
        manifest["time_step"] = ds.time_step

    write_manifest(path, manifest)
    for name, array in arrays.items():
        (path / f"{name}{TENSOR_SUFFIX}").write_bytes(
            np.ascontiguousarray(array, dtype=FLOAT_DTYPE).tobytes()
        )

    _LOGGER.info("save_dataset: %s -> %s", ds, path)


# ----------------------------------------------------------------------------
def _read_array(path: Path, name: str, entry: dict[str, Any]) -> np.ndarray:
    try:
        shape = tuple(int(e) for e in entry["shape"])
        file_name = str(entry["file"])
    except (KeyError, TypeError, ValueError) as ex:
        msg = f"Malformed entry for array {name}"
        raise ArtifactExceptionError(msg, f"arrays.{name}") from ex

    if any(e < 0 for e in shape):
        msg = f"Negative extent in shape {shape}"
        raise ArtifactExceptionError(msg, f"arrays.{name}.shape")

    file_path = path / file_name
    if not file_path.is_file():
        msg = f"Missing tensor file {file_path}"
        raise ArtifactExceptionError(msg, f"arrays.{name}.file")

    raw = file_path.read_bytes()
    expected = math.prod(shape) * np.dtype(FLOAT_DTYPE).itemsize
    if len(raw) != expected:
        msg = f"Tensor file {file_path} holds {len(raw)} bytes, shape {shape} needs {expected}"
        raise ArtifactExceptionError(msg, f"arrays.{name}.shape")

    return np.frombuffer(raw, dtype=FLOAT_DTYPE).reshape(shape).astype(np.float64)


# ----------------------------------------------------------------------------
def _check_grid(shape: tuple[int, ...], grid: GridSpec, name: str) -> None:
    if shape != grid.extents:
        msg = f"Array {name} has sample shape {shape}, grid extents are {grid.extents}"
        raise ArtifactExceptionError(msg, f"arrays.{name}.shape")


# ----------------------------------------------------------------------------
def load_dataset(path: str | Path) -> Dataset | TrajectoryDataset:
    """Inverse of save_dataset, bitwise exact."""

    path = Path(path)
    manifest = read_manifest(path)
    check_schema(manifest, DATASET_KIND)

    arrays_entry = manifest.get("arrays")
    if not isinstance(arrays_entry, dict):
        msg = "Dataset manifest lists no arrays"
        raise ArtifactExceptionError(msg, "arrays")

    try:
        grid = GridSpec.from_dict(manifest["grid"])
    except (KeyError, TypeError, ValueError, StructureExceptionError) as ex:
        msg = f"Malformed grid description: {ex}"
        raise ArtifactExceptionError(msg, "grid") from ex

    meta = manifest.get("meta", {})
    kind = manifest.get("format")
    if kind == FORMAT_TRAJECTORIES:
        if "states" not in arrays_entry or "time_step" not in manifest:
            msg = "Trajectory dataset needs states and time_step"
            raise ArtifactExceptionError(msg, "arrays.states")
        states = _read_array(path, "states", arrays_entry["states"])
        _check_grid(states.shape[2:], grid, "states")
        ds: Dataset | TrajectoryDataset = TrajectoryDataset(
            states, float(manifest["time_step"]), grid, meta
        )
    elif kind == FORMAT_PAIRS:
        for name in ("inputs", "targets"):
            if name not in arrays_entry:
                msg = f"Pair dataset lacks {name}"
                raise ArtifactExceptionError(msg, f"arrays.{name}")
        inputs = _read_array(path, "inputs", arrays_entry["inputs"])
        targets = _read_array(path, "targets", arrays_entry["targets"])
        if inputs.shape[0] != targets.shape[0]:
            msg = f"inputs hold {inputs.shape[0]} samples, targets {targets.shape[0]}"
            raise ArtifactExceptionError(msg, "arrays.targets.shape")
        for name, array in (("inputs", inputs), ("targets", targets)):
            _check_grid(array.shape[1:], grid, name)
        ds = Dataset(inputs, targets, grid, meta)
    else:
        msg = f"Unknown dataset format {kind!r}"
        raise ArtifactExceptionError(msg, "format")

    _LOGGER.debug("load_dataset: %s <- %s", ds, path)
    return ds
