# ruff: noqa: TID252
"""Neural-HSS model construction, forward pass and reverse pass."""

from collections.abc import Callable
from dataclasses import dataclass, field
import logging
import math

import numpy as np

from ..const import (
    DEFAULT_ALPHA,
    SEED_STREAM_MODEL,
    MapVariant,
    Structure,
)
from ..exceptions.structure_exception import StructureExceptionError
from ..helpers.utils import derive_rng
from ..hss.hss_ops import hss_random
from ..models.model_hss import ClusterTree
from ..models.model_network import (
    DenseLinearLayer,
    GradientSet,
    HssLinearLayer,
    Layer,
    LinearTensorMap,
    NdHssLayer,
    NeuralHssModel,
)
from .layers import (
    DenseLayerTape,
    HssLayerTape,
    NdHssLayerTape,
    dense_layer_apply,
    dense_layer_vjp,
    hss_layer_apply,
    hss_layer_vjp,
    nd_hss_apply,
    nd_hss_vjp,
)
from .tensor_map import TensorMapTape, tensor_map_apply, tensor_map_vjp

# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
_LOGGER = logging.getLogger(__name__)

_LAYER_APPLY: dict[type, Callable] = {
    HssLinearLayer: hss_layer_apply,
    NdHssLayer: nd_hss_apply,
    DenseLinearLayer: dense_layer_apply,
}
_LAYER_VJP: dict[type, Callable] = {
    HssLayerTape: hss_layer_vjp,
    NdHssLayerTape: nd_hss_vjp,
    DenseLayerTape: dense_layer_vjp,
}


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
@dataclass
class ModelTape:
    """Forward record of a whole model evaluation."""

    model: NeuralHssModel
    lift: TensorMapTape | None = None
    layers: list = field(default_factory=list)
    project: TensorMapTape | None = None


# ----------------------------------------------------------------------------
# Construction
# ----------------------------------------------------------------------------
def _alpha() -> np.ndarray:
    return np.full(1, DEFAULT_ALPHA)


# ----------------------------------------------------------------------------
def build_hss_model(
    extent: int,
    levels: int,
    rank: int,
    depth: int,
    seed: int,
    init_scale: float = 1.0,
    final_activation: bool = False,
) -> NeuralHssModel:
    """Stack of depth HssLinearLayers on a balanced tree of the given levels."""

    if depth < 1:
        msg = f"Model depth must be >= 1, got {depth}"
        raise StructureExceptionError(msg)

    tree = ClusterTree(extent, levels)
    layers: list[Layer] = [
        HssLinearLayer(
            hss_random(tree, rank, seed, init_scale, index=i),
            _alpha(),
            use_activation=final_activation or i < depth - 1,
        )
        for i in range(depth)
    ]
    model = NeuralHssModel(
        layers, structure=Structure.HSS.value, seed=seed, init_scale=init_scale
    )
    _LOGGER.debug("build_hss_model: %s", model)
    return model


# ----------------------------------------------------------------------------
def build_nd_hss_model(
    extent: int,
    modes: int,
    levels: int,
    rank: int,
    outer_rank: int,
    depth: int,
    seed: int,
    init_scale: float = 1.0,
    final_activation: bool = False,
) -> NeuralHssModel:
    """Stack of depth NdHssLayers with one rank for every factor."""

    if depth < 1:
        msg = f"Model depth must be >= 1, got {depth}"
        raise StructureExceptionError(msg)

    tree = ClusterTree(extent, levels)
    # Each rank-one term contributes a product of m factors; shrinking every
    # factor by the m-th root of r_out keeps the sum O(1).
    factor_scale = init_scale / outer_rank ** (1.0 / modes)
    layers: list[Layer] = []
    for i in range(depth):
        factors = [
            [
                hss_random(
                    tree, rank, seed, factor_scale, index=(i * outer_rank + k) * modes + j
                )
                for j in range(modes)
            ]
            for k in range(outer_rank)
        ]
        layers.append(
            NdHssLayer(
                factors, _alpha(), use_activation=final_activation or i < depth - 1
            )
        )

    return NeuralHssModel(
        layers, structure=Structure.ND_HSS.value, seed=seed, init_scale=init_scale
    )


# ----------------------------------------------------------------------------
def dense_baseline_params(extent: int, width: int, depth: int) -> int:
    """Parameter count of a dense stack extent -> width ... width -> extent."""

    if depth == 1:
        return extent * extent + 1
    return 2 * extent * width + (depth - 2) * width * width + depth


# ----------------------------------------------------------------------------
def build_dense_baseline(
    extent: int,
    depth: int,
    target_params: int,
    seed: int,
    init_scale: float = 1.0,
    final_activation: bool = False,
) -> NeuralHssModel:
    """Dense stack with the hidden width whose parameter count is closest to target."""

    rng = derive_rng(seed, SEED_STREAM_MODEL)
    if depth == 1:
        shapes = [(extent, extent)]
    else:
        width = min(
            range(1, extent + 1),
            key=lambda w: abs(dense_baseline_params(extent, w, depth) - target_params),
        )
        shapes = [(width, extent)] + [(width, width)] * (depth - 2) + [(extent, width)]

    layers: list[Layer] = []
    for i, (rows, cols) in enumerate(shapes):
        bound = init_scale / np.sqrt(cols)
        layers.append(
            DenseLinearLayer(
                rng.uniform(-1.0, 1.0, size=(rows, cols)) * bound,
                _alpha(),
                use_activation=final_activation or i < depth - 1,
            )
        )

    model = NeuralHssModel(
        layers, structure=Structure.DENSE.value, seed=seed, init_scale=init_scale
    )
    _LOGGER.debug(
        "build_dense_baseline: target=%s, actual=%s", target_params, model.param_count()
    )
    return model


# ----------------------------------------------------------------------------
def build_tensor_map(
    in_shape: tuple[int, ...],
    out_shape: tuple[int, ...],
    variant: str,
    seed: int,
    rank: int = 1,
    init_scale: float = 1.0,
) -> LinearTensorMap:
    """Randomly initialized lifting or projection map."""

    rng = derive_rng(seed, SEED_STREAM_MODEL)
    fan_in = math.prod(in_shape)
    if variant == MapVariant.DENSE.value:
        bound = init_scale / np.sqrt(fan_in)
        coefficients = rng.uniform(-1.0, 1.0, size=(*out_shape, *in_shape)) * bound
        return LinearTensorMap(tuple(in_shape), tuple(out_shape), variant, coefficients)

    if variant != MapVariant.CP.value:
        msg = f"Unsupported tensor map variant: {variant}"
        raise ValueError(msg)

    return LinearTensorMap(
        tuple(in_shape),
        tuple(out_shape),
        variant,
        weights=rng.uniform(-1.0, 1.0, size=rank) * init_scale / np.sqrt(rank),
        out_factors=[rng.uniform(-1.0, 1.0, size=(rank, e)) for e in out_shape],
        in_factors=[
            rng.uniform(-1.0, 1.0, size=(rank, e)) / np.sqrt(e) for e in in_shape
        ],
    )


# ----------------------------------------------------------------------------
# Evaluation
# ----------------------------------------------------------------------------
def model_forward(model: NeuralHssModel, x: np.ndarray) -> tuple[np.ndarray, ModelTape]:
    """Compose lift, layers and projection, keeping every tape."""

    tape = ModelTape(model)
    current = x
    if model.lift is not None:
        current, tape.lift = tensor_map_apply(model.lift, current)

    for i, layer in enumerate(model.layers):
        try:
            apply = _LAYER_APPLY[type(layer)]
        except KeyError as ex:
            msg = f"Layer {i} has unsupported type {type(layer).__name__}"
            raise StructureExceptionError(msg) from ex
        current, layer_tape = apply(layer, current)
        tape.layers.append(layer_tape)

    if model.project is not None:
        current, tape.project = tensor_map_apply(model.project, current)

    return current, tape


# ----------------------------------------------------------------------------
def model_vjp(tape: ModelTape, d_pred: np.ndarray) -> GradientSet:
    """Chain the component adjoints in reverse; gradients in declaration order."""

    grads = GradientSet()
    current = d_pred
    if tape.project is not None:
        current, block = tensor_map_vjp(tape.project, current)
        grads.merge("project", block)

    for i in range(len(tape.layers) - 1, -1, -1):
        layer_tape = tape.layers[i]
        current, block = _LAYER_VJP[type(layer_tape)](layer_tape, current)
        grads.merge(f"layers.{i}", block)

    if tape.lift is not None:
        current, block = tensor_map_vjp(tape.lift, current)
        grads.merge("lift", block)

    return GradientSet(
        {name: grads.blocks[name] for name in tape.model.parameters()}
    )


# ----------------------------------------------------------------------------
def predict(model: NeuralHssModel, x: np.ndarray) -> np.ndarray:
    """Forward pass in physical units, applying the stored input/output scales."""

    out, _ = model_forward(model, x / model.input_scale)
    return out * model.output_scale


# ----------------------------------------------------------------------------
def parameter_census(model: NeuralHssModel) -> dict[str, int]:
    """Scalar count per parameter block."""
    return {name: int(block.size) for name, block in model.parameters().items()}
