"""Tests for the error metrics and the evaluation report."""

import numpy as np
import pandas as pd
import pytest

from neuralhss.exceptions.metric_exception import MetricExceptionError
from neuralhss.exceptions.structure_exception import StructureExceptionError
from neuralhss.metrics.errors import (
    eval_report_frame,
    relative_l2,
    relative_l2_values,
    trajectory_l2,
    trajectory_l2_values,
    write_eval_report,
)
from neuralhss.models.model_evaluation import EvalReport, SweepPoint, SweepResult


def test_relative_l2_per_sample():
    """Each sample is normalised by its own target norm."""

    target = np.array([[3.0, 4.0], [1.0, 0.0]])
    pred = np.array([[3.0, 4.0], [1.0, 1.0]])

    values = relative_l2_values(pred, target)

    np.testing.assert_allclose(values, [0.0, 1.0])
    assert relative_l2(pred, target) == pytest.approx(0.5)


def test_relative_l2_flattens_spatial_modes(rng):
    """Multi-dimensional samples use the norm over all entries."""

    target = rng.standard_normal((2, 4, 4))
    pred = 1.1 * target

    np.testing.assert_allclose(relative_l2_values(pred, target), [0.1, 0.1])


@pytest.mark.parametrize("scale", [1e-3, -2.0, 1e4])
def test_relative_l2_ignores_common_scale(rng, scale):
    """Scaling prediction and target together leaves the error unchanged."""

    target = rng.standard_normal((5, 8))
    pred = target + 0.1 * rng.standard_normal((5, 8))

    assert relative_l2(scale * pred, scale * target) == pytest.approx(
        relative_l2(pred, target), rel=1e-12
    )


def test_relative_l2_ignores_sample_order(rng):
    """Permuting the batch permutes the values and keeps the mean."""

    target = rng.standard_normal((6, 4, 4))
    pred = target + 0.2 * rng.standard_normal((6, 4, 4))
    order = rng.permutation(6)

    values = relative_l2_values(pred, target)

    np.testing.assert_allclose(relative_l2_values(pred[order], target[order]), values[order])
    assert relative_l2(pred[order], target[order]) == pytest.approx(relative_l2(pred, target))


def test_relative_l2_zero_target():
    """A zero target names the sample."""

    with pytest.raises(MetricExceptionError) as excinfo:
        relative_l2_values(np.ones((3, 2)), np.array([[1.0, 0.0], [0.0, 0.0], [1.0, 1.0]]))
    assert excinfo.value.index == 1


def test_trajectory_l2():
    """Unweighted norm over time and space."""

    target = np.zeros((2, 3, 2))
    pred = np.zeros((2, 3, 2))
    pred[0, 1, 0] = 3.0
    pred[0, 2, 1] = 4.0

    np.testing.assert_allclose(trajectory_l2_values(pred, target), [5.0, 0.0])
    assert trajectory_l2(pred, target) == pytest.approx(2.5)


def test_shape_mismatch():
    """Prediction and target must agree."""

    with pytest.raises(StructureExceptionError):
        trajectory_l2_values(np.zeros((2, 3)), np.zeros((2, 4)))


def test_eval_report_csv(tmp_path):
    """One row per sample and a final aggregate row."""

    report = EvalReport("relative_l2", np.array([0.1, 0.3]))

    frame = eval_report_frame(report)
    assert frame["sample_index"].tolist() == ["0", "1", "mean"]
    assert frame["value"].iloc[-1] == pytest.approx(0.2)

    write_eval_report(report, tmp_path / "eval" / "report.csv")
    written = pd.read_csv(tmp_path / "eval" / "report.csv", dtype={"sample_index": str})
    assert written["sample_index"].iloc[-1] == "mean"
    assert written["value"].iloc[0] == 0.1


def test_empty_report_aggregate():
    """No samples gives a NaN mean."""

    assert np.isnan(EvalReport("relative_l2", np.zeros(0)).aggregate)


def test_sweep_ordering():
    """Points sort by axis value and then model name."""

    result = SweepResult(
        "train_size",
        [
            SweepPoint(100, "hss", 0.1, 1.0, 10),
            SweepPoint(10, "hss", 0.3, 1.0, 10),
            SweepPoint(10, "dense", 0.5, 1.0, 11),
        ],
    )

    assert [(p.axis_value, p.model) for p in result.ordered()] == [
        (10, "dense"),
        (10, "hss"),
        (100, "hss"),
    ]
    assert [p.metric for p in result.series("hss")] == [0.3, 0.1]
