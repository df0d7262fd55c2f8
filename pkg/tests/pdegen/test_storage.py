"""Tests for dataset files."""

import json

import numpy as np
import pytest

from neuralhss.exceptions.artifact_exception import ArtifactExceptionError
from neuralhss.models.model_dataset import TrajectoryDataset
from neuralhss.pdegen.storage import load_dataset, save_dataset

from tests.helpers.factories import decay_trajectories, pair_dataset


def test_pairs_round_trip(tmp_path):
    """Arrays, grid and meta are restored exactly."""

    data = pair_dataset()

    # Call the method
    save_dataset(data, tmp_path)
    loaded = load_dataset(tmp_path)

    # Verify results
    assert np.array_equal(loaded.inputs, data.inputs)
    assert np.array_equal(loaded.targets, data.targets)
    assert loaded.grid == data.grid
    assert loaded.meta == data.meta


def test_trajectories_round_trip(tmp_path):
    """The time step survives with the states."""

    data = decay_trajectories()
    save_dataset(data, tmp_path)
    loaded = load_dataset(tmp_path)

    assert isinstance(loaded, TrajectoryDataset)
    assert np.array_equal(loaded.states, data.states)
    assert loaded.time_step == data.time_step


def test_identical_datasets_give_identical_bytes(tmp_path):
    """Saving twice produces the same files."""

    save_dataset(pair_dataset(), tmp_path / "a")
    save_dataset(pair_dataset(), tmp_path / "b")

    for name in ("manifest.json", "inputs.f8", "targets.f8"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


def test_truncated_tensor(tmp_path):
    """Tensor files must match their declared shapes."""

    save_dataset(pair_dataset(), tmp_path)
    path = tmp_path / "targets.f8"
    path.write_bytes(path.read_bytes()[:16])

    with pytest.raises(ArtifactExceptionError) as excinfo:
        load_dataset(tmp_path)
    assert excinfo.value.field == "arrays.targets.shape"


def test_unknown_format(tmp_path):
    """Only pairs and trajectories are known."""

    save_dataset(pair_dataset(), tmp_path)
    manifest_path = tmp_path / "manifest.json"
    manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
    manifest["format"] = "images"
    manifest_path.write_text(json.dumps(manifest), encoding="utf-8")

    with pytest.raises(ArtifactExceptionError) as excinfo:
        load_dataset(tmp_path)
    assert excinfo.value.field == "format"


def test_model_directory_is_not_a_dataset(tmp_path):
    """The manifest kind is checked."""

    (tmp_path / "manifest.json").write_text(
        json.dumps({"kind": "neuralhss-model", "schema_version": "1.0"}), encoding="utf-8"
    )
    with pytest.raises(ArtifactExceptionError) as excinfo:
        load_dataset(tmp_path)
    assert excinfo.value.field == "kind"


def _edit_manifest(path, edit):
    manifest_path = path / "manifest.json"
    manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
    edit(manifest)
    manifest_path.write_text(json.dumps(manifest), encoding="utf-8")


def test_inconsistent_grid_is_an_artifact_error(tmp_path):
    """A grid that is no stride subsample points at the grid entry."""

    save_dataset(pair_dataset(), tmp_path)
    _edit_manifest(tmp_path, lambda m: m["grid"].update(extents=[5]))

    with pytest.raises(ArtifactExceptionError) as excinfo:
        load_dataset(tmp_path)
    assert excinfo.value.field == "grid"


def test_array_shapes_must_match_the_grid(tmp_path):
    """Reshaped arrays of the right size still disagree with the grid."""

    save_dataset(pair_dataset(count=6, extent=16), tmp_path)

    def reshape(manifest):
        for name in ("inputs", "targets"):
            manifest["arrays"][name]["shape"] = [6, 4, 4]

    _edit_manifest(tmp_path, reshape)

    with pytest.raises(ArtifactExceptionError) as excinfo:
        load_dataset(tmp_path)
    assert excinfo.value.field == "arrays.inputs.shape"


def test_trajectory_shape_must_match_the_grid(tmp_path):
    """States carry the grid after the trajectory and time axes."""

    save_dataset(decay_trajectories(count=4, steps=5, extent=16), tmp_path)
    _edit_manifest(tmp_path, lambda m: m["arrays"]["states"].update(shape=[4, 5, 4, 4]))

    with pytest.raises(ArtifactExceptionError) as excinfo:
        load_dataset(tmp_path)
    assert excinfo.value.field == "arrays.states.shape"


def test_malformed_shape_entry(tmp_path):
    """A shape that is not a list of integers names the array."""

    save_dataset(pair_dataset(), tmp_path)
    _edit_manifest(tmp_path, lambda m: m["arrays"]["inputs"].update(shape=["six", 16]))

    with pytest.raises(ArtifactExceptionError) as excinfo:
        load_dataset(tmp_path)
    assert excinfo.value.field == "arrays.inputs"
