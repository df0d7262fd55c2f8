# ruff: noqa: TID252
"""Forward passes and hand-written adjoints of the network layers."""

from dataclasses import dataclass, field
import logging

import numpy as np

from ..exceptions.structure_exception import StructureExceptionError
from ..exceptions.tape_exception import TapeExceptionError
from ..helpers.general import Validator
from ..hss.hss_ops import HssTape, hss_backward, hss_forward
from ..models.model_hss import HssMatrix
from ..models.model_network import DenseLinearLayer, HssLinearLayer, NdHssLayer
from .tensor_ops import leaky_relu, leaky_relu_vjp

# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
_LOGGER = logging.getLogger(__name__)


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
@dataclass
class HssLayerTape:
    """Forward record of one HssLinearLayer evaluation."""

    layer: HssLinearLayer
    version: int
    hss: HssTape
    pre_activation: np.ndarray


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
@dataclass
class NdHssLayerTape:
    """Forward record of one NdHssLayer evaluation."""

    layer: NdHssLayer
    version: int
    # hss[k][j] belongs to the product of term k along mode j.
    hss: list[list[HssTape]] = field(default_factory=list)
    pre_activation: np.ndarray | None = None


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
@dataclass
class DenseLayerTape:
    """Forward record of one DenseLinearLayer evaluation."""

    layer: DenseLinearLayer
    version: int
    inputs: np.ndarray
    pre_activation: np.ndarray


# ----------------------------------------------------------------------------
# Shared
# ----------------------------------------------------------------------------
def _check_tape(tape: object, tape_type: type, dy: np.ndarray) -> None:
    """Reject foreign, stale or shape-incongruent tapes."""

    if not isinstance(tape, tape_type):
        msg = f"Expected {tape_type.__name__}, got {type(tape).__name__}"
        raise TapeExceptionError(msg)

    if tape.version != tape.layer.version:
        msg = (
            f"Stale tape: recorded at parameter version {tape.version}, "
            f"layer is at {tape.layer.version}"
        )
        raise TapeExceptionError(msg)

    if dy.shape != tape.pre_activation.shape:
        msg = f"Upstream gradient shape {dy.shape} does not match {tape.pre_activation.shape}"
        raise TapeExceptionError(msg)


# ----------------------------------------------------------------------------
def _activate(layer, pre: np.ndarray) -> np.ndarray:
    return leaky_relu(pre, layer.alpha) if layer.use_activation else pre


# ----------------------------------------------------------------------------
def _activation_vjp(layer, pre: np.ndarray, dy: np.ndarray) -> tuple[np.ndarray, float]:
    if layer.use_activation:
        return leaky_relu_vjp(pre, layer.alpha, dy)
    return dy, 0.0


# ----------------------------------------------------------------------------
def _prefixed(prefix: str, matrix: HssMatrix) -> dict[str, np.ndarray]:
    return {f"{prefix}.{name}": block for name, block in matrix.blocks()}


# ----------------------------------------------------------------------------
# 1D HSS layer
# ----------------------------------------------------------------------------
def hss_layer_apply(
    layer: HssLinearLayer, x: np.ndarray
) -> tuple[np.ndarray, HssLayerTape]:
    """y = LeakyReLU_alpha(W x) for a batch x of shape (batch, d)."""

    if x.ndim != 2:
        msg = f"hss_layer_apply: expected (batch, d) input, got shape {x.shape}"
        raise StructureExceptionError(msg)
    Validator.check_trailing(x, (layer.extent,), "hss_layer_apply input")

    hss_tape = HssTape()
    pre = hss_forward(layer.weight, x.T, hss_tape).T
    return _activate(layer, pre), HssLayerTape(layer, layer.version, hss_tape, pre)


# ----------------------------------------------------------------------------
def hss_layer_vjp(
    tape: HssLayerTape, dy: np.ndarray
) -> tuple[np.ndarray, dict[str, np.ndarray]]:
    """Return dx and gradients of every weight block and alpha."""

    _check_tape(tape, HssLayerTape, dy)
    layer = tape.layer

    dpre, dalpha = _activation_vjp(layer, tape.pre_activation, dy)
    dx, grad_weight = hss_backward(layer.weight, tape.hss, dpre.T)

    grads = _prefixed("weight", grad_weight)
    grads["alpha"] = np.array([dalpha])
    return dx.T, grads


# ----------------------------------------------------------------------------
# m-dimensional HSS layer
# ----------------------------------------------------------------------------
def _mode_forward(
    factor: HssMatrix, z: np.ndarray, axis: int, tape: HssTape
) -> np.ndarray:
    """Apply factor along axis of z through the batched HSS matvec."""

    moved = np.moveaxis(z, axis, 0)
    shape = moved.shape
    out = hss_forward(factor, moved.reshape(shape[0], -1), tape)
    return np.moveaxis(out.reshape(shape), 0, axis)


# ----------------------------------------------------------------------------
def _mode_backward(
    factor: HssMatrix, tape: HssTape, d_out: np.ndarray, axis: int
) -> tuple[np.ndarray, HssMatrix]:
    moved = np.moveaxis(d_out, axis, 0)
    shape = moved.shape
    dz, grad = hss_backward(factor, tape, moved.reshape(shape[0], -1))
    return np.moveaxis(dz.reshape(shape), 0, axis), grad


# ----------------------------------------------------------------------------
def nd_hss_apply(layer: NdHssLayer, Z: np.ndarray) -> tuple[np.ndarray, NdHssLayerTape]:
    """Sum over k of Z x_1 W_1^(k) ... x_m W_m^(k), then the activation.

    Z has shape (batch, d, ..., d) with m spatial modes. Every modal product
    runs through the batched HSS matvec along its mode.
    """

    Validator.check_trailing(Z, (layer.extent,) * layer.modes, "nd_hss_apply input")
    if Z.ndim != layer.modes + 1:
        msg = f"nd_hss_apply: expected {layer.modes} spatial modes, got shape {Z.shape}"
        raise StructureExceptionError(msg)

    tape = NdHssLayerTape(layer, layer.version)
    pre: np.ndarray | None = None
    for term in layer.factors:
        term_tapes = []
        current = Z
        for j, factor in enumerate(term):
            factor_tape = HssTape()
            current = _mode_forward(factor, current, j + 1, factor_tape)
            term_tapes.append(factor_tape)
        tape.hss.append(term_tapes)
        pre = current if pre is None else pre + current

    assert pre is not None
    tape.pre_activation = pre
    return _activate(layer, pre), tape


# ----------------------------------------------------------------------------
def nd_hss_vjp(
    tape: NdHssLayerTape, d_out: np.ndarray
) -> tuple[np.ndarray, dict[str, np.ndarray]]:
    """Exact adjoint of nd_hss_apply."""

    _check_tape(tape, NdHssLayerTape, d_out)
    layer = tape.layer
    assert tape.pre_activation is not None

    dpre, dalpha = _activation_vjp(layer, tape.pre_activation, d_out)

    grads: dict[str, np.ndarray] = {}
    dz_total: np.ndarray | None = None
    for k, term in enumerate(layer.factors):
        current = dpre
        for j in range(len(term) - 1, -1, -1):
            current, grad = _mode_backward(term[j], tape.hss[k][j], current, j + 1)
            grads.update(_prefixed(f"factors.{k}.{j}", grad))
        dz_total = current if dz_total is None else dz_total + current

    # Declaration order: term by term, mode by mode.
    ordered = {name: grads[name] for name, _ in layer.parameters() if name != "alpha"}
    ordered["alpha"] = np.array([dalpha])
    assert dz_total is not None
    return dz_total, ordered


# ----------------------------------------------------------------------------
# Dense layer
# ----------------------------------------------------------------------------
def dense_layer_apply(
    layer: DenseLinearLayer, x: np.ndarray
) -> tuple[np.ndarray, DenseLayerTape]:
    """y = LeakyReLU_alpha(x W^T) for a batch x of shape (batch, in)."""

    if x.ndim != 2 or x.shape[1] != layer.weight.shape[1]:
        msg = (
            f"dense_layer_apply: input shape {x.shape} does not fit weight "
            f"{layer.weight.shape}"
        )
        raise StructureExceptionError(msg)

    pre = x @ layer.weight.T
    return _activate(layer, pre), DenseLayerTape(layer, layer.version, x, pre)


# ----------------------------------------------------------------------------
def dense_layer_vjp(
    tape: DenseLayerTape, dy: np.ndarray
) -> tuple[np.ndarray, dict[str, np.ndarray]]:
    """Return dx and the gradients of the weight and alpha."""

    _check_tape(tape, DenseLayerTape, dy)
    layer = tape.layer
    dpre, dalpha = _activation_vjp(layer, tape.pre_activation, dy)
    return dpre @ layer.weight, {
        "weight": dpre.T @ tape.inputs,
        "alpha": np.array([dalpha]),
    }
