# ruff: noqa: TID252
"""Mini-batch training loop."""

from collections.abc import Callable
import logging
import math
from pathlib import Path
import time

import numpy as np
import pandas as pd

from ..const import (
    COL_EPOCH,
    COL_EVAL_METRIC,
    COL_LR,
    COL_STEP,
    COL_TRAIN_LOSS,
    SEED_STREAM_SHUFFLE,
)
from ..exceptions.training_exception import TrainingExceptionError
from ..helpers.utils import derive_rng
from ..models.model_network import GradientSet, NeuralHssModel
from ..models.model_training import AdamWState, TrainConfig, TrainReport
from ..neural.network import model_forward, model_vjp, parameter_census
from .adamw import adamw_step
from .losses import alpha_penalty, mse_loss
from .schedule import clip_global_norm, cosine_lr

# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
_LOGGER = logging.getLogger(__name__)

# Called with the model after an evaluated epoch; returns the validation metric.
EvalCallback = Callable[[NeuralHssModel], float]


# ----------------------------------------------------------------------------
def _loss_and_grads(
    model: NeuralHssModel, x: np.ndarray, y: np.ndarray, coefficient: float
) -> tuple[float, GradientSet]:
    pred, tape = model_forward(model, x)
    loss, d_pred = mse_loss(pred, y)
    grads = model_vjp(tape, d_pred)

    alphas = model.alphas()
    penalty, d_alphas = alpha_penalty([float(a[0]) for a in alphas.values()], coefficient)
    if coefficient:
        for name, d_alpha in zip(alphas, d_alphas, strict=True):
            grads.blocks[name] = grads.blocks[name] + d_alpha
    return loss + penalty, grads


# ----------------------------------------------------------------------------
def fit(
    model: NeuralHssModel,
    inputs: np.ndarray,
    targets: np.ndarray,
    config: TrainConfig,
    evaluate: EvalCallback | None = None,
) -> TrainReport:
    """Train model in place on (inputs, targets) and return the report.

    Every epoch draws one permutation from the shuffle seed and keeps the last
    partial batch. The cosine schedule spans all updates, so the first update
    uses peak_lr and the last uses min_lr.
    """

    count = inputs.shape[0]
    if count == 0:
        msg = "Cannot train on an empty dataset"
        raise TrainingExceptionError(msg)
    if targets.shape[0] != count:
        msg = f"Dataset has {count} inputs but {targets.shape[0]} targets"
        raise TrainingExceptionError(msg)

    batches = math.ceil(count / config.batch_size)
    total_steps = config.epochs * batches
    params = model.parameters()
    state = AdamWState.zeros_like(params)
    rng = derive_rng(config.shuffle_seed, SEED_STREAM_SHUFFLE)
    report = TrainReport()

    _LOGGER.info(
        "fit: model=%s, samples=%s, epochs=%s, steps=%s",
        model,
        count,
        config.epochs,
        total_steps,
    )

    started = time.perf_counter()
    step = 0
    for epoch in range(config.epochs):
        order = rng.permutation(count)
        epoch_loss = 0.0
        for start in range(0, count, config.batch_size):
            step_started = time.perf_counter_ns()
            index = order[start : start + config.batch_size]
            lr = (
                config.peak_lr
                if total_steps == 1
                else cosine_lr(step, total_steps - 1, config.peak_lr, config.min_lr)
            )

            loss, grads = _loss_and_grads(
                model, inputs[index], targets[index], config.alpha_penalty
            )
            if not math.isfinite(loss) or not grads.is_finite():
                _LOGGER.error("fit: non-finite loss %s at epoch %s step %s", loss, epoch, step)
                msg = f"Non-finite training loss {loss}"
                raise TrainingExceptionError(msg, epoch, step)

            adamw_step(params, clip_global_norm(grads, config.grad_clip_norm), state, lr, config)
            model.bump_version()

            report.epochs.append(epoch)
            report.steps.append(step)
            report.lrs.append(lr)
            report.losses.append(loss)
            report.step_times_ns.append(time.perf_counter_ns() - step_started)
            epoch_loss += loss * index.size
            step += 1

        report.epoch_losses.append(epoch_loss / count)
        is_last = epoch == config.epochs - 1
        if evaluate is not None and config.eval_every > 0 and (
            (epoch + 1) % config.eval_every == 0 or is_last
        ):
            metric = float(evaluate(model))
            report.evaluations.append((epoch, metric))
            _LOGGER.info(
                "fit: epoch=%s, loss=%.6e, eval=%.6e", epoch, report.epoch_losses[-1], metric
            )
        elif _LOGGER.isEnabledFor(logging.DEBUG):
            _LOGGER.debug("fit: epoch=%s, loss=%.6e", epoch, report.epoch_losses[-1])

    report.census = parameter_census(model)
    report.wall_seconds = time.perf_counter() - started
    _LOGGER.info("fit: done, %s, step_times=%s", report, report.step_time_stats())
    return report


# ----------------------------------------------------------------------------
def train_report_frame(report: TrainReport) -> pd.DataFrame:
    """One row per step; eval_metric is set on the last step of evaluated epochs."""

    frame = pd.DataFrame(
        {
            COL_EPOCH: report.epochs,
            COL_STEP: report.steps,
            COL_LR: report.lrs,
            COL_TRAIN_LOSS: report.losses,
            COL_EVAL_METRIC: np.nan,
        }
    )
    for epoch, metric in report.evaluations:
        rows = frame.index[frame[COL_EPOCH] == epoch]
        if len(rows):
            frame.loc[rows[-1], COL_EVAL_METRIC] = metric
    return frame


# ----------------------------------------------------------------------------
def write_train_report(report: TrainReport, path: str | Path) -> None:
    """Write the report as CSV."""

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    train_report_frame(report).to_csv(path, index=False, float_format="%.17g")
