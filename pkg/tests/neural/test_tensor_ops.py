"""Tests for the modal product and the activation."""

import numpy as np
import pytest

from neuralhss.exceptions.structure_exception import StructureExceptionError
from neuralhss.neural.tensor_ops import leaky_relu, leaky_relu_vjp, modal_product


def test_modal_product_matches_matrix_product(rng):
    """Along mode 1 of a matrix the product is Z W^T."""

    Z = rng.standard_normal((3, 5))
    W = rng.standard_normal((4, 5))

    np.testing.assert_allclose(modal_product(Z, W, 1), Z @ W.T)
    np.testing.assert_allclose(modal_product(Z.T, W, 0), W @ Z.T)


def test_modal_products_commute_across_modes(rng):
    """Products along distinct modes commute."""

    Z = rng.standard_normal((2, 4, 4))
    A = rng.standard_normal((4, 4))
    B = rng.standard_normal((4, 4))
    np.testing.assert_allclose(
        modal_product(modal_product(Z, A, 1), B, 2),
        modal_product(modal_product(Z, B, 2), A, 1),
        atol=1e-12,
    )


def test_modal_product_errors(rng):
    """Bad modes and mismatched extents raise."""

    Z = rng.standard_normal((3, 5))
    with pytest.raises(StructureExceptionError):
        modal_product(Z, np.eye(5), 2)
    with pytest.raises(StructureExceptionError):
        modal_product(Z, np.eye(3), 1)


def test_leaky_relu():
    """Zero counts as non-negative."""

    x = np.array([-2.0, 0.0, 3.0])
    np.testing.assert_array_equal(leaky_relu(x, 0.1), [-0.2, 0.0, 3.0])
    np.testing.assert_array_equal(leaky_relu(x, np.ones(1)), x)


def test_leaky_relu_vjp():
    """dx scales negative entries; dalpha collects dy * x over them."""

    x = np.array([-2.0, 0.0, 3.0])
    dy = np.array([1.0, 2.0, 3.0])

    dx, dalpha = leaky_relu_vjp(x, 0.5, dy)

    np.testing.assert_array_equal(dx, [0.5, 2.0, 3.0])
    assert dalpha == -2.0
