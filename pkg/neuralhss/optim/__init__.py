"""Losses, schedule, AdamW and the training loop."""

from .adamw import adamw_step
from .losses import alpha_penalty, mse_loss
from .schedule import clip_global_norm, cosine_lr
from .trainer import fit, train_report_frame, write_train_report

__all__ = [
    "adamw_step",
    "alpha_penalty",
    "clip_global_norm",
    "cosine_lr",
    "fit",
    "mse_loss",
    "train_report_frame",
    "write_train_report",
]
