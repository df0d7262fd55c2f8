# ruff: noqa: TID252
"""Dense and CP low-rank linear tensor maps used for lifting and projection."""

from dataclasses import dataclass
import math

import numpy as np

from ..const import MapVariant
from ..exceptions.structure_exception import StructureExceptionError
from ..exceptions.tape_exception import TapeExceptionError
from ..models.model_network import LinearTensorMap

# Subscript alphabets for generated einsum expressions.
_BATCH = "z"
_RANK = "y"
_IN_LETTERS = "abcdefgh"
_OUT_LETTERS = "jklmnopq"


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
@dataclass
class TensorMapTape:
    """Forward record of one tensor map evaluation."""

    layer: LinearTensorMap
    version: int
    inputs: np.ndarray
    # CP only: contractions <v_i, Z> per batch entry (batch, r) and the stacked
    # outer products of the u factors (r, *out_shape).
    contractions: np.ndarray | None = None
    outer: np.ndarray | None = None


# ----------------------------------------------------------------------------
def _subscripts(layer: LinearTensorMap) -> tuple[str, str]:
    return _IN_LETTERS[: len(layer.in_shape)], _OUT_LETTERS[: len(layer.out_shape)]


# ----------------------------------------------------------------------------
def _outer(layer: LinearTensorMap) -> np.ndarray:
    """Stack of outer products u_i^(1) x ... x u_i^(m), shape (r, *out_shape)."""

    _, out_sub = _subscripts(layer)
    operands = ",".join(f"{_RANK}{letter}" for letter in out_sub)
    return np.einsum(f"{operands}->{_RANK}{out_sub}", *layer.out_factors)


# ----------------------------------------------------------------------------
def cp_to_dense(layer: LinearTensorMap) -> np.ndarray:
    """Expand a CP map into its full coefficient tensor (out_shape + in_shape)."""

    in_sub, out_sub = _subscripts(layer)
    operands = [f"{_RANK}"]
    operands += [f"{_RANK}{letter}" for letter in out_sub]
    operands += [f"{_RANK}{letter}" for letter in in_sub]
    expr = ",".join(operands) + f"->{out_sub}{in_sub}"
    assert layer.weights is not None
    return np.einsum(
        expr, layer.weights, *layer.out_factors, *layer.in_factors, optimize=True
    )


# ----------------------------------------------------------------------------
def tensor_map_apply(
    layer: LinearTensorMap, Z: np.ndarray
) -> tuple[np.ndarray, TensorMapTape]:
    """phi_W(Z)_a = sum_b W_{a,b} Z_b for every batch entry of Z."""

    if tuple(Z.shape[1:]) != tuple(layer.in_shape):
        msg = f"tensor_map_apply: input shape {Z.shape[1:]} != {tuple(layer.in_shape)}"
        raise StructureExceptionError(msg)

    batch = Z.shape[0]
    if layer.variant == MapVariant.DENSE.value:
        assert layer.coefficients is not None
        matrix = layer.coefficients.reshape(
            math.prod(layer.out_shape), math.prod(layer.in_shape)
        )
        out = (Z.reshape(batch, -1) @ matrix.T).reshape(batch, *layer.out_shape)
        return out, TensorMapTape(layer, layer.version, Z)

    assert layer.weights is not None
    in_sub, out_sub = _subscripts(layer)
    factors = ",".join(f"{_RANK}{letter}" for letter in in_sub)
    contractions = np.einsum(
        f"{_BATCH}{in_sub},{factors}->{_BATCH}{_RANK}",
        Z,
        *layer.in_factors,
        optimize=True,
    )
    outer = _outer(layer)
    out = np.einsum(
        f"{_BATCH}{_RANK},{_RANK}{out_sub}->{_BATCH}{out_sub}",
        contractions * layer.weights,
        outer,
    )
    return out, TensorMapTape(layer, layer.version, Z, contractions, outer)


# ----------------------------------------------------------------------------
def tensor_map_vjp(
    tape: TensorMapTape, d_out: np.ndarray
) -> tuple[np.ndarray, dict[str, np.ndarray]]:
    """Return dZ and the gradient of every coefficient block."""

    if not isinstance(tape, TensorMapTape):
        msg = f"Expected TensorMapTape, got {type(tape).__name__}"
        raise TapeExceptionError(msg)

    layer = tape.layer
    if tape.version != layer.version:
        msg = f"Stale tape: recorded at version {tape.version}, map at {layer.version}"
        raise TapeExceptionError(msg)

    batch = tape.inputs.shape[0]
    if tuple(d_out.shape) != (batch, *layer.out_shape):
        msg = f"Upstream gradient shape {d_out.shape} does not match the map output"
        raise TapeExceptionError(msg)

    Z = tape.inputs
    if layer.variant == MapVariant.DENSE.value:
        assert layer.coefficients is not None
        matrix = layer.coefficients.reshape(
            math.prod(layer.out_shape), math.prod(layer.in_shape)
        )
        d_flat = d_out.reshape(batch, -1)
        dz = (d_flat @ matrix).reshape(Z.shape)
        d_coeff = (d_flat.T @ Z.reshape(batch, -1)).reshape(layer.coefficients.shape)
        return dz, {"coefficients": d_coeff}

    assert layer.weights is not None
    assert tape.contractions is not None and tape.outer is not None
    in_sub, out_sub = _subscripts(layer)
    s = tape.contractions
    c = layer.weights

    g = np.einsum(f"{_BATCH}{out_sub},{_RANK}{out_sub}->{_BATCH}{_RANK}", d_out, tape.outer)
    dc = np.sum(g * s, axis=0)
    ds = g * c
    d_outer = np.einsum(
        f"{_BATCH}{_RANK},{_BATCH}{out_sub}->{_RANK}{out_sub}", s * c, d_out
    )

    grads: dict[str, np.ndarray] = {"c": dc}
    for j, letter in enumerate(out_sub):
        others = [
            (f"{_RANK}{other}", factor)
            for other, factor in zip(out_sub, layer.out_factors, strict=True)
            if other != letter
        ]
        expr = ",".join([f"{_RANK}{out_sub}", *(sub for sub, _ in others)])
        grads[f"u.{j}"] = np.einsum(
            f"{expr}->{_RANK}{letter}",
            d_outer,
            *(factor for _, factor in others),
            optimize=True,
        )

    in_factor_subs = ",".join(f"{_RANK}{letter}" for letter in in_sub)
    dz = np.einsum(
        f"{_BATCH}{_RANK},{in_factor_subs}->{_BATCH}{in_sub}",
        ds,
        *layer.in_factors,
        optimize=True,
    )
    for j, letter in enumerate(in_sub):
        others = [
            (f"{_RANK}{other}", factor)
            for other, factor in zip(in_sub, layer.in_factors, strict=True)
            if other != letter
        ]
        expr = ",".join(
            [f"{_BATCH}{_RANK}", f"{_BATCH}{in_sub}", *(sub for sub, _ in others)]
        )
        grads[f"v.{j}"] = np.einsum(
            f"{expr}->{_RANK}{letter}",
            ds,
            Z,
            *(factor for _, factor in others),
            optimize=True,
        )

    return dz, grads
