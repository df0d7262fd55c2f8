# ruff: noqa: TID252
"""Learning-rate schedule and gradient clipping."""

import logging
import math

from ..models.model_network import GradientSet

# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
_LOGGER = logging.getLogger(__name__)


# ----------------------------------------------------------------------------
def cosine_lr(step: int, total_steps: int, peak: float, minimum: float) -> float:
    """Cosine decay from peak at step 0 to minimum at total_steps, no warmup."""

    if total_steps < 0 or not 0 <= step <= total_steps:
        msg = f"cosine_lr: step {step} outside [0, {total_steps}]"
        raise ValueError(msg)

    if step == 0:
        return peak
    if step == total_steps:
        return minimum
    return minimum + 0.5 * (peak - minimum) * (1.0 + math.cos(math.pi * step / total_steps))


# ----------------------------------------------------------------------------
def clip_global_norm(grads: GradientSet, max_norm: float) -> GradientSet:
    """Scale every block by max_norm / g when the global norm g exceeds max_norm."""

    norm = grads.global_norm()
    if max_norm <= 0 or norm <= max_norm:
        return grads

    _LOGGER.debug("clip_global_norm: %.6g -> %.6g", norm, max_norm)
    return grads.scaled(max_norm / norm)
