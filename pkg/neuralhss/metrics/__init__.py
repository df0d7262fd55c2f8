"""Evaluation metrics and the rollout protocol."""

from .errors import (
    eval_report_frame,
    relative_l2,
    relative_l2_values,
    trajectory_l2,
    trajectory_l2_values,
    write_eval_report,
)
from .rollout import build_step_pairs, predict_rescaled, residual_scale, rollout

__all__ = [
    "build_step_pairs",
    "eval_report_frame",
    "predict_rescaled",
    "relative_l2",
    "relative_l2_values",
    "residual_scale",
    "rollout",
    "trajectory_l2",
    "trajectory_l2_values",
    "write_eval_report",
]
