# ruff: noqa: TID252
"""Shared plumbing for the subcommands: paths, model factories and training data."""

import hashlib
import logging
from pathlib import Path
from typing import Any

import numpy as np

from ..config.config_utils import config_fingerprint
from ..const import (
    CONF_ALPHA_PENALTY,
    CONF_BATCH_SIZE,
    CONF_BETAS,
    CONF_DEPTH,
    CONF_EPOCHS,
    CONF_EPS_ADAM,
    CONF_EVAL_EVERY,
    CONF_FINAL_ACTIVATION,
    CONF_GRAD_CLIP_NORM,
    CONF_INIT_SCALE,
    CONF_LEVELS,
    CONF_MAX_RESCALE,
    CONF_MIN_LR,
    CONF_OUT,
    CONF_OUTER_RANK,
    CONF_PEAK_LR,
    CONF_RANK,
    CONF_SHUFFLE_SEED,
    CONF_STRUCTURE,
    CONF_WEIGHT_DECAY,
    SEED_STREAM_MODEL,
    Structure,
)
from ..exceptions.structure_exception import StructureExceptionError
from ..metrics.errors import relative_l2, trajectory_l2
from ..metrics.rollout import build_step_pairs, residual_scale, rollout
from ..models.model_dataset import Dataset, GridSpec, TrajectoryDataset
from ..models.model_network import NeuralHssModel
from ..models.model_training import TrainConfig
from ..neural.network import build_dense_baseline, build_hss_model, build_nd_hss_model, predict
from ..optim.trainer import EvalCallback

# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
_LOGGER = logging.getLogger(__name__)


# ----------------------------------------------------------------------------
# Paths
# ----------------------------------------------------------------------------
def resolve_path(global_config: dict[str, Any], path: str) -> Path:
    """Relative paths live below the --out directory."""

    candidate = Path(path)
    if candidate.is_absolute():
        return candidate
    return Path(global_config[CONF_OUT]) / candidate


# ----------------------------------------------------------------------------
def fingerprint(global_config: dict[str, Any], section: dict[str, Any]) -> str:
    """Short hash of the resolved configuration."""

    text = config_fingerprint(global_config, section)
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]


# ----------------------------------------------------------------------------
def derive_seed(seed: int, index: int) -> int:
    """Independent model seed number index below the global seed."""
    return int(np.random.SeedSequence([seed, SEED_STREAM_MODEL, index]).generate_state(1)[0])


# ----------------------------------------------------------------------------
# Models
# ----------------------------------------------------------------------------
def build_model(model_config: dict[str, Any], grid: GridSpec, seed: int) -> NeuralHssModel:
    """Model of the configured structure acting on the stored grid."""

    structure = model_config[CONF_STRUCTURE]
    extent = grid.extents[0]
    if any(e != extent for e in grid.extents):
        msg = f"Models need equal extents on every mode, got {grid.extents}"
        raise StructureExceptionError(msg)

    if structure == Structure.ND_HSS.value:
        return build_nd_hss_model(
            extent,
            grid.dims,
            model_config[CONF_LEVELS],
            model_config[CONF_RANK],
            model_config[CONF_OUTER_RANK],
            model_config[CONF_DEPTH],
            seed,
            model_config[CONF_INIT_SCALE],
            model_config[CONF_FINAL_ACTIVATION],
        )

    if grid.dims != 1:
        msg = f"Structure {structure} acts on 1D grids, dataset has {grid.dims} modes"
        raise StructureExceptionError(msg)

    reference = build_hss_model(
        extent,
        model_config[CONF_LEVELS],
        model_config[CONF_RANK],
        model_config[CONF_DEPTH],
        seed,
        model_config[CONF_INIT_SCALE],
        model_config[CONF_FINAL_ACTIVATION],
    )
    if structure == Structure.HSS.value:
        return reference

    return build_dense_baseline(
        extent,
        model_config[CONF_DEPTH],
        reference.param_count(),
        seed,
        model_config[CONF_INIT_SCALE],
        model_config[CONF_FINAL_ACTIVATION],
    )


# ----------------------------------------------------------------------------
def train_config(optimizer: dict[str, Any], count: int, seed: int) -> TrainConfig:
    """TrainConfig from a validated optimizer section; no batch size means full batch."""

    batch_size = optimizer[CONF_BATCH_SIZE]
    shuffle_seed = optimizer[CONF_SHUFFLE_SEED]
    return TrainConfig(
        epochs=optimizer[CONF_EPOCHS],
        batch_size=min(batch_size, count) if batch_size else count,
        peak_lr=optimizer[CONF_PEAK_LR],
        min_lr=optimizer[CONF_MIN_LR],
        weight_decay=optimizer[CONF_WEIGHT_DECAY],
        betas=tuple(optimizer[CONF_BETAS]),
        eps_adam=optimizer[CONF_EPS_ADAM],
        grad_clip_norm=optimizer[CONF_GRAD_CLIP_NORM],
        alpha_penalty=optimizer[CONF_ALPHA_PENALTY],
        shuffle_seed=seed if shuffle_seed is None else shuffle_seed,
        eval_every=optimizer[CONF_EVAL_EVERY],
    )


# ----------------------------------------------------------------------------
# Training data
# ----------------------------------------------------------------------------
def _max_abs(values: np.ndarray) -> float:
    peak = float(np.max(np.abs(values))) if values.size else 0.0
    return peak if peak > 0.0 else 1.0


# ----------------------------------------------------------------------------
def training_arrays(
    model: NeuralHssModel,
    train: Dataset | TrajectoryDataset,
    model_config: dict[str, Any],
) -> tuple[np.ndarray, np.ndarray]:
    """Network-unit (inputs, targets); stores the scales on model.

    Trajectories become step pairs with targets (u_{t+dt} - u_t) / s. Pairs are
    divided by their training maxima when max rescaling is on.
    """

    if isinstance(train, TrajectoryDataset):
        inputs, deltas = build_step_pairs(train.states)
        model.residual_scale = residual_scale(deltas)
        _LOGGER.info("training_arrays: residual_scale=%.6e", model.residual_scale)
        return inputs, deltas / model.residual_scale

    if model_config[CONF_MAX_RESCALE]:
        model.input_scale = _max_abs(train.inputs)
        model.output_scale = _max_abs(train.targets)
        _LOGGER.info(
            "training_arrays: input_scale=%.6e, output_scale=%.6e",
            model.input_scale,
            model.output_scale,
        )
    return train.inputs / model.input_scale, train.targets / model.output_scale


# ----------------------------------------------------------------------------
def held_out_metric(model: NeuralHssModel, test: Dataset | TrajectoryDataset) -> float:
    """Relative L2 on pairs, trajectory L2 of the full rollout on trajectories."""

    if isinstance(test, TrajectoryDataset):
        pred = rollout(model, test.states[:, 0], test.steps - 1)
        return trajectory_l2(pred, test.states)
    return relative_l2(predict(model, test.inputs), test.targets)


# ----------------------------------------------------------------------------
def evaluator(test: Dataset | TrajectoryDataset | None) -> EvalCallback | None:
    """Training callback measuring the held-out metric, if there is a test split."""

    if test is None or test.size == 0:
        return None
    return lambda model: held_out_metric(model, test)
