# ruff: noqa: TID252
"""Model manifest and raw parameter blob on disk."""

from collections.abc import Callable
import json
import logging
from pathlib import Path
from typing import Any

import numpy as np
from packaging.version import Version

from ..const import (
    FLOAT_DTYPE,
    MANIFEST_FILE,
    PARAMETER_FILE,
    SCHEMA_VERSION,
    VERSION,
    MapVariant,
)
from ..exceptions.artifact_exception import ArtifactExceptionError
from ..exceptions.structure_exception import StructureExceptionError
from ..hss.hss_ops import hss_zeros
from ..models.model_hss import ClusterTree, HssMatrix
from ..models.model_network import (
    DenseLinearLayer,
    HssLinearLayer,
    Layer,
    LinearTensorMap,
    NdHssLayer,
    NeuralHssModel,
)

# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
_LOGGER = logging.getLogger(__name__)

MODEL_KIND = "neuralhss-model"
LAYER_HSS = "hss"
LAYER_ND_HSS = "nd_hss"
LAYER_DENSE = "dense"


# ----------------------------------------------------------------------------
# Manifest helpers
# ----------------------------------------------------------------------------
def check_schema(manifest: dict[str, Any], kind: str) -> None:
    """Reject manifests of another kind or another major schema version."""

    if manifest.get("kind") != kind:
        msg = f"Expected a {kind} manifest, found {manifest.get('kind')!r}"
        raise ArtifactExceptionError(msg, "kind")

    try:
        found = Version(str(manifest["schema_version"]))
    except (KeyError, ValueError) as ex:
        msg = "Missing or malformed schema version"
        raise ArtifactExceptionError(msg, "schema_version") from ex

    if found.major != Version(SCHEMA_VERSION).major:
        msg = f"Schema version {found} is not compatible with {SCHEMA_VERSION}"
        raise ArtifactExceptionError(msg, "schema_version")


# ----------------------------------------------------------------------------
def read_manifest(path: Path) -> dict[str, Any]:
    """Load a JSON manifest from a directory."""

    manifest_path = path / MANIFEST_FILE
    if not manifest_path.is_file():
        msg = f"Missing manifest {manifest_path}"
        raise ArtifactExceptionError(msg, MANIFEST_FILE)

    try:
        with manifest_path.open(encoding="utf-8") as manifest_file:
            return json.load(manifest_file)
    except json.JSONDecodeError as ex:
        msg = f"Malformed manifest {manifest_path}: {ex}"
        raise ArtifactExceptionError(msg, MANIFEST_FILE) from ex


# ----------------------------------------------------------------------------
def write_manifest(path: Path, manifest: dict[str, Any]) -> None:
    """Write manifest with sorted keys so identical content gives identical bytes."""

    path.mkdir(parents=True, exist_ok=True)
    with (path / MANIFEST_FILE).open("w", encoding="utf-8") as manifest_file:
        manifest_file.write(json.dumps(manifest, indent=4, sort_keys=True))
        manifest_file.write("\n")


# ----------------------------------------------------------------------------
# Layer descriptions
# ----------------------------------------------------------------------------
def _describe_hss(matrix: HssMatrix) -> dict[str, int]:
    return {"extent": matrix.d, "depth": matrix.depth, "rank": matrix.rank}


# ----------------------------------------------------------------------------
def _describe_layer(layer: Layer) -> dict[str, Any]:
    description: dict[str, Any] = {
        "use_activation": layer.use_activation,
        "alpha": float(layer.alpha[0]),
    }
    if isinstance(layer, HssLinearLayer):
        description.update(type=LAYER_HSS, **_describe_hss(layer.weight))
    elif isinstance(layer, NdHssLayer):
        description.update(
            type=LAYER_ND_HSS,
            factors=[[_describe_hss(f) for f in term] for term in layer.factors],
        )
    else:
        description.update(type=LAYER_DENSE, shape=list(layer.weight.shape))
    return description


# ----------------------------------------------------------------------------
def _describe_map(layer: LinearTensorMap | None) -> dict[str, Any] | None:
    if layer is None:
        return None
    return {
        "in_shape": list(layer.in_shape),
        "out_shape": list(layer.out_shape),
        "variant": layer.variant,
        "rank": layer.rank,
    }


# ----------------------------------------------------------------------------
def _skeleton_hss(description: dict[str, int]) -> HssMatrix:
    tree = ClusterTree(int(description["extent"]), int(description["depth"]))
    return hss_zeros(tree, int(description["rank"]))


# ----------------------------------------------------------------------------
def _skeleton_layer(description: dict[str, Any]) -> Layer:
    use_activation = bool(description["use_activation"])
    kind = description.get("type")
    if kind == LAYER_HSS:
        return HssLinearLayer(
            _skeleton_hss(description), np.zeros(1), use_activation=use_activation
        )
    if kind == LAYER_ND_HSS:
        factors = [[_skeleton_hss(f) for f in term] for term in description["factors"]]
        return NdHssLayer(factors, np.zeros(1), use_activation=use_activation)
    if kind == LAYER_DENSE:
        return DenseLinearLayer(
            np.zeros(tuple(description["shape"])),
            np.zeros(1),
            use_activation=use_activation,
        )

    msg = f"Unknown layer type {kind!r}"
    raise ArtifactExceptionError(msg, "layers.type")


# ----------------------------------------------------------------------------
def _skeleton_map(description: dict[str, Any] | None) -> LinearTensorMap | None:
    if description is None:
        return None

    in_shape = tuple(description["in_shape"])
    out_shape = tuple(description["out_shape"])
    variant = description["variant"]
    if variant == MapVariant.DENSE.value:
        return LinearTensorMap(
            in_shape, out_shape, variant, np.zeros((*out_shape, *in_shape))
        )

    rank = int(description["rank"])
    return LinearTensorMap(
        in_shape,
        out_shape,
        variant,
        weights=np.zeros(rank),
        out_factors=[np.zeros((rank, e)) for e in out_shape],
        in_factors=[np.zeros((rank, e)) for e in in_shape],
    )


# ----------------------------------------------------------------------------
# Save / load
# ----------------------------------------------------------------------------
def save_model(model: NeuralHssModel, path: str | Path) -> None:
    """Write manifest.json and the parameter blob in declaration order."""

    path = Path(path)
    params = model.parameters()
    entries = []
    offset = 0
    for name, block in params.items():
        entries.append({"name": name, "shape": list(block.shape), "offset": offset})
        offset += block.size

    manifest = {
        "kind": MODEL_KIND,
        "schema_version": SCHEMA_VERSION,
        "generator_version": VERSION,
        "structure": model.structure,
        "seed": model.seed,
        "init_scale": model.init_scale,
        "residual_scale": model.residual_scale,
        "input_scale": model.input_scale,
        "output_scale": model.output_scale,
        "lift": _describe_map(model.lift),
        "layers": [_describe_layer(layer) for layer in model.layers],
        "project": _describe_map(model.project),
        "parameter_file": PARAMETER_FILE,
        "parameter_count": offset,
        "parameters": entries,
    }
    write_manifest(path, manifest)

    with (path / PARAMETER_FILE).open("wb") as blob:
        for block in params.values():
            blob.write(np.ascontiguousarray(block, dtype=FLOAT_DTYPE).tobytes())

    _LOGGER.info("save_model: %s -> %s", model, path)


# ----------------------------------------------------------------------------
def _build_part(field: str, build: Callable[[Any], Any], description: Any) -> Any:
    """Run build on one manifest entry; malformed entries name field."""

    try:
        return build(description)
    except (KeyError, TypeError, ValueError, StructureExceptionError) as ex:
        msg = f"Malformed model manifest entry {field}: {ex}"
        raise ArtifactExceptionError(msg, field) from ex


# ----------------------------------------------------------------------------
def _read_parameters(
    manifest: dict[str, Any], params: dict[str, np.ndarray], values: np.ndarray
) -> None:
    entries = manifest.get("parameters")
    if not isinstance(entries, list) or len(entries) != len(params):
        msg = f"Model manifest must list {len(params)} parameter entries"
        raise ArtifactExceptionError(msg, "parameters")

    offset = 0
    for i, (entry, (name, block)) in enumerate(zip(entries, params.items(), strict=True)):
        try:
            entry_name = entry["name"]
            entry_shape = tuple(int(e) for e in entry["shape"])
        except (KeyError, TypeError, ValueError) as ex:
            msg = f"Malformed parameter entry {i}"
            raise ArtifactExceptionError(msg, f"parameters.{i}") from ex

        if entry_name != name:
            msg = f"Parameter entry {entry_name} does not match layout {name}"
            raise ArtifactExceptionError(msg, f"parameters.{i}.name")
        if entry_shape != block.shape:
            msg = f"Parameter {name} has shape {entry_shape}, layout needs {block.shape}"
            raise ArtifactExceptionError(msg, f"parameters.{i}.shape")
        block[...] = values[offset : offset + block.size].reshape(block.shape)
        offset += block.size


# ----------------------------------------------------------------------------
def load_model(path: str | Path) -> NeuralHssModel:
    """Rebuild a model from save_model output; bitwise exact."""

    path = Path(path)
    manifest = read_manifest(path)
    check_schema(manifest, MODEL_KIND)

    try:
        layers = manifest["layers"]
        lift = manifest["lift"]
        project = manifest["project"]
    except KeyError as ex:
        msg = f"Model manifest lacks {ex}"
        raise ArtifactExceptionError(msg, str(ex.args[0])) from ex
    if not isinstance(layers, list):
        msg = "Model manifest layers must be a list"
        raise ArtifactExceptionError(msg, "layers")

    try:
        model = NeuralHssModel(
            [
                _build_part(f"layers.{i}", _skeleton_layer, layer)
                for i, layer in enumerate(layers)
            ],
            lift=_build_part("lift", _skeleton_map, lift),
            project=_build_part("project", _skeleton_map, project),
            residual_scale=manifest["residual_scale"],
            input_scale=float(manifest["input_scale"]),
            output_scale=float(manifest["output_scale"]),
            structure=manifest["structure"],
            seed=manifest["seed"],
            init_scale=float(manifest["init_scale"]),
        )
    except KeyError as ex:
        msg = f"Model manifest lacks {ex}"
        raise ArtifactExceptionError(msg, str(ex.args[0])) from ex

    blob_path = path / manifest.get("parameter_file", PARAMETER_FILE)
    if not blob_path.is_file():
        msg = f"Missing parameter file {blob_path}"
        raise ArtifactExceptionError(msg, "parameter_file")

    values = np.frombuffer(blob_path.read_bytes(), dtype=FLOAT_DTYPE)
    params = model.parameters()
    expected = sum(block.size for block in params.values())
    if values.size != expected or manifest.get("parameter_count") != expected:
        msg = (
            f"Parameter file holds {values.size} values, manifest declares "
            f"{manifest.get('parameter_count')}, model needs {expected}"
        )
        raise ArtifactExceptionError(msg, "parameter_count")

    _read_parameters(manifest, params, values)

    _LOGGER.debug("load_model: %s <- %s", model, path)
    return model
