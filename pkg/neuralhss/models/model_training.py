# ruff: noqa: TID252
"""Training configuration, optimizer state and report data model."""

from dataclasses import dataclass, field

import numpy as np

from ..const import (
    DEFAULT_ALPHA_PENALTY,
    DEFAULT_BATCH_SIZE,
    DEFAULT_BETA1,
    DEFAULT_BETA2,
    DEFAULT_EPOCHS,
    DEFAULT_EPS_ADAM,
    DEFAULT_EVAL_EVERY,
    DEFAULT_GRAD_CLIP_NORM,
    DEFAULT_MIN_LR,
    DEFAULT_PEAK_LR,
    DEFAULT_WEIGHT_DECAY,
)
from ..exceptions.validation_exception import ValidationExceptionError


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
@dataclass
class TrainConfig:
    """Hyperparameters of one training run."""

    epochs: int = DEFAULT_EPOCHS
    batch_size: int = DEFAULT_BATCH_SIZE
    peak_lr: float = DEFAULT_PEAK_LR
    min_lr: float = DEFAULT_MIN_LR
    weight_decay: float = DEFAULT_WEIGHT_DECAY
    betas: tuple[float, float] = (DEFAULT_BETA1, DEFAULT_BETA2)
    eps_adam: float = DEFAULT_EPS_ADAM
    # Zero or negative disables clipping.
    grad_clip_norm: float = DEFAULT_GRAD_CLIP_NORM
    # Coefficient of the (alpha - 1)^2 penalty.
    alpha_penalty: float = DEFAULT_ALPHA_PENALTY
    shuffle_seed: int = 0
    # Evaluate the callback metric every this many epochs; 0 disables.
    eval_every: int = DEFAULT_EVAL_EVERY

    # ----------------------------------------------------------------------------
    def __post_init__(self) -> None:
        """Check ranges that the schema cannot express."""

        if self.batch_size < 1:
            raise ValidationExceptionError("optimizer", "batch_size")
        if self.epochs < 0:
            raise ValidationExceptionError("optimizer", "epochs")
        if not self.min_lr > 0:
            raise ValidationExceptionError("optimizer", "min_lr")
        if self.peak_lr < self.min_lr:
            raise ValidationExceptionError("optimizer", "peak_lr")
        if self.alpha_penalty < 0:
            raise ValidationExceptionError("optimizer", "alpha_penalty")
        self.betas = (float(self.betas[0]), float(self.betas[1]))


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
@dataclass
class AdamWState:
    """First and second moments per parameter block."""

    first: dict[str, np.ndarray] = field(default_factory=dict)
    second: dict[str, np.ndarray] = field(default_factory=dict)
    step: int = 0

    # ----------------------------------------------------------------------------
    @classmethod
    def zeros_like(cls, params: dict[str, np.ndarray]) -> "AdamWState":
        """Zero moments congruent with params."""
        return cls(
            {name: np.zeros_like(block) for name, block in params.items()},
            {name: np.zeros_like(block) for name, block in params.items()},
        )


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
@dataclass
class TrainReport:
    """What happened during fit."""

    #####################################
    # Per step
    #####################################
    epochs: list[int] = field(default_factory=list)
    steps: list[int] = field(default_factory=list)
    lrs: list[float] = field(default_factory=list)
    losses: list[float] = field(default_factory=list)
    step_times_ns: list[int] = field(default_factory=list)

    #####################################
    # Per epoch
    #####################################
    epoch_losses: list[float] = field(default_factory=list)
    # (epoch, metric) at the evaluation cadence.
    evaluations: list[tuple[int, float]] = field(default_factory=list)

    #####################################
    # Final
    #####################################
    census: dict[str, int] = field(default_factory=dict)
    wall_seconds: float = 0.0

    # ----------------------------------------------------------------------------
    @property
    def final_loss(self) -> float:
        """Mean train loss of the last epoch, NaN before any epoch."""
        return self.epoch_losses[-1] if self.epoch_losses else float("nan")

    # ----------------------------------------------------------------------------
    def step_time_stats(self) -> dict[str, float]:
        """Median, p90 and total of the per-step wall times in seconds."""

        if not self.step_times_ns:
            return {"median": 0.0, "p90": 0.0, "total": 0.0}

        seconds = np.asarray(self.step_times_ns, dtype=float) * 1e-9
        return {
            "median": float(np.median(seconds)),
            "p90": float(np.percentile(seconds, 90)),
            "total": float(np.sum(seconds)),
        }

    # ----------------------------------------------------------------------------
    def __repr__(self) -> str:
        """Return string representation of TrainReport."""
        return (
            f"epochs={len(self.epoch_losses)}, "
            f"steps={len(self.steps)}, "
            f"final_loss={self.final_loss}, "
            f"evaluations={len(self.evaluations)}"
        )
