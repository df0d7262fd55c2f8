"""Differentiable Neural-HSS layers and models."""

from .layers import (
    dense_layer_apply,
    dense_layer_vjp,
    hss_layer_apply,
    hss_layer_vjp,
    nd_hss_apply,
    nd_hss_vjp,
)
from .network import (
    ModelTape,
    build_dense_baseline,
    build_hss_model,
    build_nd_hss_model,
    build_tensor_map,
    model_forward,
    model_vjp,
    parameter_census,
    predict,
)
from .serialization import load_model, save_model
from .tensor_map import cp_to_dense, tensor_map_apply, tensor_map_vjp
from .tensor_ops import leaky_relu, leaky_relu_vjp, modal_product

__all__ = [
    "ModelTape",
    "build_dense_baseline",
    "build_hss_model",
    "build_nd_hss_model",
    "build_tensor_map",
    "cp_to_dense",
    "dense_layer_apply",
    "dense_layer_vjp",
    "hss_layer_apply",
    "hss_layer_vjp",
    "leaky_relu",
    "leaky_relu_vjp",
    "load_model",
    "modal_product",
    "model_forward",
    "model_vjp",
    "nd_hss_apply",
    "nd_hss_vjp",
    "parameter_census",
    "predict",
    "save_model",
    "tensor_map_apply",
    "tensor_map_vjp",
]
