"""Tests for saving and loading models."""

import json

import numpy as np
import pytest

from neuralhss.exceptions.artifact_exception import ArtifactExceptionError
from neuralhss.neural.network import build_dense_baseline, build_tensor_map, predict
from neuralhss.neural.serialization import check_schema, load_model, save_model

from tests.helpers.factories import tiny_hss_model, tiny_nd_model


@pytest.mark.parametrize(
    "factory",
    [tiny_hss_model, tiny_nd_model, lambda: build_dense_baseline(16, 2, 400, seed=1)],
)
def test_save_load_is_bitwise_exact(factory, tmp_path):
    """Every parameter block and the predictions survive a save/load cycle."""

    model = factory()
    model.residual_scale = 0.25

    # Call the method
    save_model(model, tmp_path / "model")
    loaded = load_model(tmp_path / "model")

    # Verify results
    assert list(loaded.parameters()) == list(model.parameters())
    for name, block in model.parameters().items():
        assert np.array_equal(loaded.parameters()[name], block), name
    assert loaded.residual_scale == 0.25
    assert loaded.structure == model.structure
    assert [layer.use_activation for layer in loaded.layers] == [
        layer.use_activation for layer in model.layers
    ]


def test_tensor_maps_survive(tmp_path, rng):
    """CP lift and dense projection are restored."""

    model = tiny_hss_model()
    model.lift = build_tensor_map((4, 4), (16,), "cp", seed=3, rank=2)
    model.project = build_tensor_map((16,), (16,), "dense", seed=4)
    save_model(model, tmp_path)

    x = rng.standard_normal((2, 4, 4))
    np.testing.assert_array_equal(predict(load_model(tmp_path), x), predict(model, x))


def test_manifest_contents(tmp_path):
    """The manifest records the layout and the parameter offsets."""

    model = tiny_hss_model()
    save_model(model, tmp_path)

    manifest = json.loads((tmp_path / "manifest.json").read_text(encoding="utf-8"))

    assert manifest["kind"] == "neuralhss-model"
    assert manifest["parameter_count"] == model.param_count()
    assert manifest["parameters"][0] == {
        "name": "layers.0.weight.levels.0.d",
        "shape": [4, 4, 4],
        "offset": 0,
    }
    assert (tmp_path / "parameters.f8").stat().st_size == 8 * model.param_count()


def test_missing_manifest(tmp_path):
    """An empty directory is not a model."""

    with pytest.raises(ArtifactExceptionError) as excinfo:
        load_model(tmp_path)
    assert excinfo.value.field == "manifest.json"


def test_truncated_parameter_file(tmp_path):
    """The blob must hold exactly the declared count."""

    save_model(tiny_hss_model(), tmp_path)
    blob = tmp_path / "parameters.f8"
    blob.write_bytes(blob.read_bytes()[:-8])

    with pytest.raises(ArtifactExceptionError) as excinfo:
        load_model(tmp_path)
    assert excinfo.value.field == "parameter_count"


def test_incompatible_schema(tmp_path):
    """Major schema versions must match."""

    save_model(tiny_hss_model(), tmp_path)
    manifest_path = tmp_path / "manifest.json"
    manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
    manifest["schema_version"] = "2.0"
    manifest_path.write_text(json.dumps(manifest), encoding="utf-8")

    with pytest.raises(ArtifactExceptionError) as excinfo:
        load_model(tmp_path)
    assert excinfo.value.field == "schema_version"


def test_check_schema_kind():
    """Dataset manifests are not model manifests."""

    with pytest.raises(ArtifactExceptionError):
        check_schema({"kind": "neuralhss-dataset", "schema_version": "1.0"}, "neuralhss-model")
    with pytest.raises(ArtifactExceptionError):
        check_schema({"kind": "neuralhss-model", "schema_version": "x.y"}, "neuralhss-model")


def _edit_manifest(path, edit):
    manifest_path = path / "manifest.json"
    manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
    edit(manifest)
    manifest_path.write_text(json.dumps(manifest), encoding="utf-8")


def test_corrupted_parameter_shape_names_the_entry(tmp_path):
    """A parameter entry whose shape disagrees with the layout is rejected."""

    save_model(tiny_hss_model(), tmp_path)
    _edit_manifest(tmp_path, lambda m: m["parameters"][0].update(shape=[4, 2, 8]))

    with pytest.raises(ArtifactExceptionError) as excinfo:
        load_model(tmp_path)
    assert excinfo.value.field == "parameters.0.shape"


@pytest.mark.parametrize(
    ("edit", "field"),
    [
        (lambda m: m["layers"][0].update(extent=10), "layers.0"),
        (lambda m: m["layers"][1].pop("rank"), "layers.1"),
        (lambda m: m["parameters"][2].update(shape="abc"), "parameters.2"),
        (lambda m: m["parameters"].pop(), "parameters"),
    ],
)
def test_malformed_layout_entries_name_the_field(tmp_path, edit, field):
    """Broken layer and parameter descriptions are artifact errors, not crashes."""

    save_model(tiny_hss_model(), tmp_path)
    _edit_manifest(tmp_path, edit)

    with pytest.raises(ArtifactExceptionError) as excinfo:
        load_model(tmp_path)
    assert excinfo.value.field == field


def test_dense_layer_shape_is_checked(tmp_path):
    """A dense layer shape that is not a list of extents names the layer."""

    save_model(build_dense_baseline(16, 2, 400, seed=1), tmp_path)
    _edit_manifest(tmp_path, lambda m: m["layers"][0].update(shape=[16, "x"]))

    with pytest.raises(ArtifactExceptionError) as excinfo:
        load_model(tmp_path)
    assert excinfo.value.field == "layers.0"
