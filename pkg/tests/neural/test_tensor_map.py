"""Tests for dense and CP tensor maps."""

import numpy as np
import pytest

from neuralhss.exceptions.structure_exception import StructureExceptionError
from neuralhss.exceptions.tape_exception import TapeExceptionError
from neuralhss.neural.network import build_tensor_map
from neuralhss.neural.tensor_map import cp_to_dense, tensor_map_apply, tensor_map_vjp

from tests.helpers.gradient_check import numeric_gradient, relative_error


def _loss(layer, Z, w):
    def loss() -> float:
        out, _ = tensor_map_apply(layer, Z)
        return float(np.sum(w * out))

    return loss


def test_dense_map_is_contraction(rng):
    """out[b, a] = sum over input indices of W[a, i] Z[b, i]."""

    layer = build_tensor_map((3, 4), (2,), "dense", seed=1)
    Z = rng.standard_normal((5, 3, 4))

    out, _ = tensor_map_apply(layer, Z)

    np.testing.assert_allclose(out, np.einsum("aij,bij->ba", layer.coefficients, Z))


def test_cp_map_matches_expanded_tensor(rng):
    """A CP map acts like its dense expansion."""

    layer = build_tensor_map((3, 4), (5, 2), "cp", seed=2, rank=3)
    Z = rng.standard_normal((2, 3, 4))

    out, _ = tensor_map_apply(layer, Z)

    dense = cp_to_dense(layer)
    assert dense.shape == (5, 2, 3, 4)
    np.testing.assert_allclose(out, np.einsum("klij,bij->bkl", dense, Z), atol=1e-12)


def test_cp_parameter_count():
    """r (1 + sum d_j + sum D_j) scalars."""

    layer = build_tensor_map((3, 4), (5, 2), "cp", seed=2, rank=3)
    assert sum(block.size for _, block in layer.parameters()) == 3 * (1 + 7 + 7)
    assert [name for name, _ in layer.parameters()] == ["c", "u.0", "u.1", "v.0", "v.1"]


@pytest.mark.parametrize("variant", ["dense", "cp"])
def test_map_gradients(variant, rng):
    """Adjoint agrees with central differences for both variants."""

    layer = build_tensor_map((3, 4), (5, 2), variant, seed=4, rank=2)
    Z = rng.standard_normal((2, 3, 4))
    w = rng.standard_normal((2, 5, 2))
    loss = _loss(layer, Z, w)

    _, tape = tensor_map_apply(layer, Z)
    dz, grads = tensor_map_vjp(tape, w)

    for name, block in layer.parameters():
        assert relative_error(grads[name], numeric_gradient(loss, block)) < 1e-6, name
    assert relative_error(dz, numeric_gradient(loss, Z)) < 1e-6


def test_map_errors(rng):
    """Wrong input shapes, stale tapes and unknown variants raise."""

    layer = build_tensor_map((4,), (4,), "dense", seed=0)
    with pytest.raises(StructureExceptionError):
        tensor_map_apply(layer, np.zeros((2, 3)))

    out, tape = tensor_map_apply(layer, rng.standard_normal((2, 4)))
    with pytest.raises(TapeExceptionError):
        tensor_map_vjp(tape, np.zeros((2, 3)))
    layer.version += 1
    with pytest.raises(TapeExceptionError):
        tensor_map_vjp(tape, out)

    with pytest.raises(ValueError):
        build_tensor_map((4,), (4,), "tucker", seed=0)
