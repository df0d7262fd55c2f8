# ruff: noqa: TID252
"""data-efficiency and exact-recovery experiments."""

from concurrent.futures import ProcessPoolExecutor
import logging
import time
from typing import Any

import numpy as np
import pandas as pd

from ..const import (
    COL_MODEL,
    COL_PARAMS,
    COL_REL_L2,
    COL_SECONDS,
    COL_TRAIN_SIZE,
    CONF_CONTROL_SAMPLES,
    CONF_DATASET,
    CONF_EXTENT,
    CONF_LAYERS,
    CONF_LEVELS,
    CONF_MODEL,
    CONF_OPTIMIZER,
    CONF_RANK,
    CONF_SAMPLES,
    CONF_SEED,
    CONF_STRUCTURE,
    CONF_SWEEP,
    CONF_TEST_SAMPLES,
    CONF_THREADS,
    DENSE_BASELINE_TOLERANCE,
    RECOVERY_MSE_THRESHOLD,
    RECOVERY_SAMPLES_PER_RANK,
    Command,
    Structure,
)
from ..exceptions.structure_exception import StructureExceptionError
from ..exceptions.validation_exception import ValidationExceptionError
from ..metrics.errors import relative_l2, relative_l2_values
from ..models.model_dataset import Dataset, TrajectoryDataset
from ..models.model_evaluation import SweepPoint, SweepResult
from ..neural.network import build_hss_model, model_forward, predict
from ..optim.losses import mse_loss
from ..optim.trainer import fit
from ..pdegen.recovery import gen_hss_recovery_dataset
from ..pdegen.storage import load_dataset
from .cli_utils import (
    build_model,
    derive_seed,
    fingerprint,
    resolve_path,
    train_config,
    training_arrays,
)
from .cmd_train import split_dataset
from .plotting import plot_series

# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
_LOGGER = logging.getLogger(__name__)

SWEEP_CSV = "sweep.csv"
SWEEP_SVG = "sweep.svg"
RECOVERY_CSV = "recovery.csv"
SWEEP_MODELS = [Structure.HSS.value, Structure.DENSE.value]


# ----------------------------------------------------------------------------
# Data efficiency
# ----------------------------------------------------------------------------
def _train_sweep_point(
    structure: str,
    model_config: dict[str, Any],
    optimizer: dict[str, Any],
    seed: int,
    train: Dataset,
    test: Dataset,
) -> SweepPoint:
    """Train one model on one train size; runs in a worker process."""

    started = time.perf_counter()
    model = build_model({**model_config, CONF_STRUCTURE: structure}, train.grid, seed)
    inputs, targets = training_arrays(model, train, model_config)
    fit(model, inputs, targets, train_config(optimizer, train.size, seed))
    metric = relative_l2(predict(model, test.inputs), test.targets)
    return SweepPoint(
        train.size, structure, metric, time.perf_counter() - started, model.param_count()
    )


# ----------------------------------------------------------------------------
def check_parameter_match(model_config: dict[str, Any], dataset: Dataset) -> dict[str, int]:
    """Parameter counts of both sweep models; the baseline must be within tolerance."""

    counts = {
        structure: build_model({**model_config, CONF_STRUCTURE: structure}, dataset.grid, 0)
        .param_count()
        for structure in SWEEP_MODELS
    }
    reference = counts[Structure.HSS.value]
    mismatch = abs(counts[Structure.DENSE.value] - reference) / reference
    if mismatch > DENSE_BASELINE_TOLERANCE:
        msg = (
            f"Dense baseline has {counts[Structure.DENSE.value]} parameters, "
            f"Neural-HSS has {reference}; mismatch {mismatch:.1%}"
        )
        raise StructureExceptionError(msg)
    return counts


# ----------------------------------------------------------------------------
def sweep_frame(result: SweepResult) -> pd.DataFrame:
    """One row per (train size, model) in axis order."""

    return pd.DataFrame(
        [
            {
                COL_MODEL: point.model,
                COL_TRAIN_SIZE: point.axis_value,
                COL_REL_L2: point.metric,
                COL_SECONDS: point.seconds,
                COL_PARAMS: point.params,
            }
            for point in result.ordered()
        ],
        columns=[COL_MODEL, COL_TRAIN_SIZE, COL_REL_L2, COL_SECONDS, COL_PARAMS],
    )


# ----------------------------------------------------------------------------
def cmd_data_efficiency(
    global_config: dict[str, Any], section: dict[str, Any]
) -> dict[str, Any]:
    """Train size sweep of Neural-HSS against the parameter-matched dense baseline."""

    seed = global_config[CONF_SEED]
    dataset = load_dataset(resolve_path(global_config, section[CONF_DATASET]))
    if isinstance(dataset, TrajectoryDataset):
        raise ValidationExceptionError(Command.DATA_EFFICIENCY.value, CONF_DATASET)

    sweep = section[CONF_SWEEP]
    train, test = split_dataset(dataset, section[CONF_TEST_SAMPLES], seed)
    if sweep[-1] > train.size:
        _LOGGER.error(
            "data-efficiency: sweep needs %s train samples, dataset holds %s",
            sweep[-1],
            train.size,
        )
        raise ValidationExceptionError(Command.DATA_EFFICIENCY.value, CONF_SWEEP)

    counts = check_parameter_match(section[CONF_MODEL], dataset)
    jobs = [
        (
            structure,
            section[CONF_MODEL],
            section[CONF_OPTIMIZER],
            derive_seed(seed, index),
            split_dataset(dataset, section[CONF_TEST_SAMPLES], seed, size)[0],
            test,
        )
        for index, size in enumerate(sweep)
        for structure in SWEEP_MODELS
    ]

    result = SweepResult(COL_TRAIN_SIZE, fingerprint=fingerprint(global_config, section))
    threads = global_config[CONF_THREADS]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as executor:
            futures = [executor.submit(_train_sweep_point, *job) for job in jobs]
            result.points = [future.result() for future in futures]
    else:
        result.points = [_train_sweep_point(*job) for job in jobs]

    for point in result.ordered():
        _LOGGER.info(
            "data-efficiency: N=%s, model=%s, rel_l2=%.4e, %.1fs",
            point.axis_value,
            point.model,
            point.metric,
            point.seconds,
        )

    out = resolve_path(global_config, Command.DATA_EFFICIENCY.value)
    out.mkdir(parents=True, exist_ok=True)
    frame = sweep_frame(result)
    frame.to_csv(out / SWEEP_CSV, index=False, float_format="%.17g")
    plot_series(
        frame,
        out / SWEEP_SVG,
        COL_TRAIN_SIZE,
        COL_REL_L2,
        COL_MODEL,
        log_x=True,
        log_y=True,
        title="Train size vs relative test error",
    )

    return {
        "path": str(out),
        "fingerprint": result.fingerprint,
        "parameters": counts,
        "points": {
            model: {point.axis_value: point.metric for point in result.series(model)}
            for model in SWEEP_MODELS
        },
    }


# ----------------------------------------------------------------------------
# Exact recovery
# ----------------------------------------------------------------------------
def recovery_run(
    section: dict[str, Any], samples: int, seed: int
) -> dict[str, float | int]:
    """Fit a single-operator model to samples noise-free pairs of a random HSS operator."""

    test_samples = section[CONF_TEST_SAMPLES]
    dataset, _ = gen_hss_recovery_dataset(
        section[CONF_EXTENT],
        section[CONF_LEVELS],
        section[CONF_RANK],
        samples + test_samples,
        seed,
    )
    train = dataset.subset(np.arange(samples))
    test = dataset.subset(np.arange(samples, samples + test_samples))

    model = build_hss_model(
        section[CONF_EXTENT],
        section[CONF_LEVELS],
        section[CONF_RANK],
        section[CONF_LAYERS],
        derive_seed(seed, samples),
        final_activation=True,
    )
    if samples:
        config = train_config(section[CONF_OPTIMIZER], samples, seed)
        fit(model, train.inputs, train.targets, config)
        train_pred, _ = model_forward(model, train.inputs)
        train_mse, _ = mse_loss(train_pred, train.targets)
    else:
        train_mse = float("nan")

    test_pred, _ = model_forward(model, test.inputs)
    errors = relative_l2_values(test_pred, test.targets)
    alpha_error = max(abs(float(alpha[0]) - 1.0) for alpha in model.alphas().values())
    run = {
        CONF_SAMPLES: samples,
        "train_mse": float(train_mse),
        COL_REL_L2: float(np.mean(errors)),
        "rel_l2_max": float(np.max(errors)),
        "alpha_error": alpha_error,
        "recovered": bool(train_mse <= RECOVERY_MSE_THRESHOLD),
    }
    _LOGGER.info("exact-recovery: %s", run)
    return run


# ----------------------------------------------------------------------------
def recovery_samples(section: dict[str, Any]) -> int:
    """Configured sample count, or a fixed multiple of the total rank budget."""

    if section[CONF_SAMPLES] is not None:
        return section[CONF_SAMPLES]
    return RECOVERY_SAMPLES_PER_RANK * section[CONF_RANK] * max(section[CONF_LEVELS], 1)


# ----------------------------------------------------------------------------
def cmd_exact_recovery(
    global_config: dict[str, Any], section: dict[str, Any]
) -> dict[str, Any]:
    """Recover a random HSS operator, plus an under-sampled control run."""

    seed = global_config[CONF_SEED]
    runs = {"main": recovery_run(section, recovery_samples(section), seed)}
    if section[CONF_CONTROL_SAMPLES]:
        runs["control"] = recovery_run(section, section[CONF_CONTROL_SAMPLES], seed)

    out = resolve_path(global_config, Command.EXACT_RECOVERY.value)
    out.mkdir(parents=True, exist_ok=True)
    frame = pd.DataFrame([{"run": name, **run} for name, run in runs.items()])
    frame.to_csv(out / RECOVERY_CSV, index=False, float_format="%.17g")

    return {"path": str(out), **runs}
