# ruff: noqa: TID252
"""train and eval subcommands."""

import logging
from typing import Any

from ..const import (
    CONF_DATASET,
    CONF_MODEL,
    CONF_NAME,
    CONF_OPTIMIZER,
    CONF_SEED,
    CONF_TEST_SAMPLES,
    CONF_TRAIN_SAMPLES,
    Command,
)
from ..exceptions.validation_exception import ValidationExceptionError
from ..metrics.errors import (
    METRIC_RELATIVE_L2,
    METRIC_TRAJECTORY_L2,
    relative_l2_values,
    trajectory_l2_values,
    write_eval_report,
)
from ..metrics.rollout import predict_rescaled, rollout
from ..models.model_dataset import Dataset, TrajectoryDataset
from ..models.model_evaluation import EvalReport
from ..models.model_network import NeuralHssModel
from ..neural.serialization import load_model, save_model
from ..optim.trainer import fit, write_train_report
from ..pdegen.grid import split_indices
from ..pdegen.storage import load_dataset
from .cli_utils import build_model, evaluator, resolve_path, train_config, training_arrays

# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
_LOGGER = logging.getLogger(__name__)

TRAIN_REPORT_FILE = "train_report.csv"
EVAL_REPORT_FILE = "eval_report.csv"


# ----------------------------------------------------------------------------
def split_dataset(
    dataset: Dataset | TrajectoryDataset,
    test_samples: int,
    seed: int,
    train_samples: int | None = None,
) -> tuple[Dataset | TrajectoryDataset, Dataset | TrajectoryDataset]:
    """Held-out split by the global seed; train_samples keeps a prefix of the rest."""

    train_index, test_index = split_indices(dataset.size, test_samples, seed)
    if train_samples is not None:
        if train_samples > train_index.size:
            msg = f"{train_samples} train samples requested, {train_index.size} available"
            _LOGGER.error("split_dataset: %s", msg)
            raise ValidationExceptionError(Command.TRAIN.value, CONF_TRAIN_SAMPLES)
        train_index = train_index[:train_samples]
    return dataset.subset(train_index), dataset.subset(test_index)


# ----------------------------------------------------------------------------
def cmd_train(global_config: dict[str, Any], section: dict[str, Any]) -> dict[str, Any]:
    """Train a model on a stored dataset and save it with its TrainReport."""

    seed = global_config[CONF_SEED]
    dataset = load_dataset(resolve_path(global_config, section[CONF_DATASET]))
    train, test = split_dataset(
        dataset, section[CONF_TEST_SAMPLES], seed, section[CONF_TRAIN_SAMPLES]
    )

    model = build_model(section[CONF_MODEL], dataset.grid, seed)
    inputs, targets = training_arrays(model, train, section[CONF_MODEL])
    config = train_config(section[CONF_OPTIMIZER], inputs.shape[0], seed)
    report = fit(model, inputs, targets, config, evaluate=evaluator(test))

    path = resolve_path(global_config, section[CONF_NAME])
    save_model(model, path)
    write_train_report(report, path / TRAIN_REPORT_FILE)

    summary = {
        "path": str(path),
        "train_samples": train.size,
        "test_samples": test.size,
        "parameters": model.param_count(),
        "final_loss": report.final_loss,
        "eval_metric": report.evaluations[-1][1] if report.evaluations else None,
        "alphas": {name: float(alpha[0]) for name, alpha in model.alphas().items()},
        "step_times": report.step_time_stats(),
    }
    _LOGGER.info("train: %s", summary)
    return summary


# ----------------------------------------------------------------------------
def evaluate_model(
    model: NeuralHssModel, dataset: Dataset | TrajectoryDataset
) -> EvalReport:
    """Per-sample relative L2 on pairs; trajectory L2 of the full rollout otherwise."""

    if isinstance(dataset, TrajectoryDataset):
        pred = rollout(model, dataset.states[:, 0], dataset.steps - 1)
        return EvalReport(METRIC_TRAJECTORY_L2, trajectory_l2_values(pred, dataset.states))

    values = relative_l2_values(predict_rescaled(model, dataset.inputs), dataset.targets)
    return EvalReport(METRIC_RELATIVE_L2, values)


# ----------------------------------------------------------------------------
def cmd_eval(global_config: dict[str, Any], section: dict[str, Any]) -> dict[str, Any]:
    """Evaluate a saved model on the held-out split, or on everything when it is empty."""

    model = load_model(resolve_path(global_config, section[CONF_MODEL]))
    dataset = load_dataset(resolve_path(global_config, section[CONF_DATASET]))
    if section[CONF_TEST_SAMPLES]:
        _, dataset = split_dataset(
            dataset, section[CONF_TEST_SAMPLES], global_config[CONF_SEED]
        )

    report = evaluate_model(model, dataset)
    path = resolve_path(global_config, section[CONF_NAME]) / EVAL_REPORT_FILE
    write_eval_report(report, path)

    summary = {
        "path": str(path),
        "metric": report.metric,
        "samples": report.count,
        "aggregate": report.aggregate,
    }
    _LOGGER.info("eval: %s", summary)
    return summary
