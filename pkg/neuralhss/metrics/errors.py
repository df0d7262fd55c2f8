# ruff: noqa: TID252
"""Relative and trajectory L2 errors."""

import logging
from pathlib import Path

import numpy as np
import pandas as pd

from ..const import AGGREGATE_ROW, COL_SAMPLE_INDEX, COL_VALUE
from ..exceptions.metric_exception import MetricExceptionError
from ..helpers.general import Validator
from ..models.model_evaluation import EvalReport

# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
_LOGGER = logging.getLogger(__name__)

METRIC_RELATIVE_L2 = "relative_l2"
METRIC_TRAJECTORY_L2 = "trajectory_l2"


# ----------------------------------------------------------------------------
def _sample_norms(t: np.ndarray) -> np.ndarray:
    return np.sqrt(np.sum(t.reshape(t.shape[0], -1) ** 2, axis=1))


# ----------------------------------------------------------------------------
def relative_l2_values(pred: np.ndarray, target: np.ndarray) -> np.ndarray:
    """||pred_b - target_b|| / ||target_b|| for every sample b."""

    Validator.check_same_shape(pred, target, METRIC_RELATIVE_L2)
    norms = _sample_norms(target)
    zero = np.flatnonzero(norms == 0)
    if zero.size:
        msg = "relative_l2: target sample has zero norm"
        raise MetricExceptionError(msg, int(zero[0]))
    return _sample_norms(pred - target) / norms


# ----------------------------------------------------------------------------
def relative_l2(pred: np.ndarray, target: np.ndarray) -> float:
    """Batch mean of the per-sample relative L2 error."""
    return float(np.mean(relative_l2_values(pred, target)))


# ----------------------------------------------------------------------------
def trajectory_l2_values(pred: np.ndarray, target: np.ndarray) -> np.ndarray:
    """Unweighted l2 norm of pred_b - target_b over time and space."""

    Validator.check_same_shape(pred, target, METRIC_TRAJECTORY_L2)
    return _sample_norms(pred - target)


# ----------------------------------------------------------------------------
def trajectory_l2(pred: np.ndarray, target: np.ndarray) -> float:
    """Batch mean of the per-trajectory L2 error."""
    return float(np.mean(trajectory_l2_values(pred, target)))


# ----------------------------------------------------------------------------
def eval_report_frame(report: EvalReport) -> pd.DataFrame:
    """Rows (sample_index, value) followed by the aggregate row."""

    frame = pd.DataFrame(
        {
            COL_SAMPLE_INDEX: [str(i) for i in range(report.count)],
            COL_VALUE: report.values,
        }
    )
    aggregate = pd.DataFrame({COL_SAMPLE_INDEX: [AGGREGATE_ROW], COL_VALUE: [report.aggregate]})
    return pd.concat([frame, aggregate], ignore_index=True)


# ----------------------------------------------------------------------------
def write_eval_report(report: EvalReport, path: str | Path) -> None:
    """Write report as CSV."""

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    eval_report_frame(report).to_csv(path, index=False, float_format="%.17g")
    _LOGGER.info("write_eval_report: %s -> %s", report, path)
