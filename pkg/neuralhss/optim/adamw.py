# ruff: noqa: TID252
"""AdamW with decoupled weight decay."""

import numpy as np

from ..exceptions.structure_exception import StructureExceptionError
from ..models.model_network import GradientSet
from ..models.model_training import AdamWState, TrainConfig

# Blocks whose name ends with this suffix are never decayed.
NO_DECAY_SUFFIX = "alpha"


# ----------------------------------------------------------------------------
def adamw_step(
    params: dict[str, np.ndarray],
    grads: GradientSet,
    state: AdamWState,
    lr: float,
    config: TrainConfig,
) -> None:
    """Update params and state in place."""

    if params.keys() != grads.blocks.keys():
        missing = sorted(set(params) ^ set(grads.blocks))
        msg = f"adamw_step: parameter and gradient names differ: {missing[:4]}"
        raise StructureExceptionError(msg)

    beta1, beta2 = config.betas
    state.step += 1
    correction1 = 1.0 - beta1**state.step
    correction2 = 1.0 - beta2**state.step

    for name, theta in params.items():
        grad = grads.blocks[name]
        if grad.shape != theta.shape:
            msg = f"adamw_step: gradient of {name} has shape {grad.shape}, not {theta.shape}"
            raise StructureExceptionError(msg)

        first = state.first.setdefault(name, np.zeros_like(theta))
        second = state.second.setdefault(name, np.zeros_like(theta))
        first *= beta1
        first += (1.0 - beta1) * grad
        second *= beta2
        second += (1.0 - beta2) * grad * grad

        if config.weight_decay and not name.endswith(NO_DECAY_SUFFIX):
            theta -= lr * config.weight_decay * theta
        theta -= lr * (first / correction1) / (np.sqrt(second / correction2) + config.eps_adam)
