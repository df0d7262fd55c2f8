# ruff: noqa: TID252
"""Evaluation and sweep result data model."""

from dataclasses import dataclass, field

import numpy as np


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
@dataclass
class EvalReport:
    """Per-sample metric values and their mean."""

    metric: str
    values: np.ndarray

    @property
    def count(self) -> int:
        """Number of evaluated samples."""
        return int(self.values.shape[0])

    @property
    def aggregate(self) -> float:
        """Mean of the per-sample values."""
        return float(np.mean(self.values)) if self.count else float("nan")

    # ----------------------------------------------------------------------------
    def __repr__(self) -> str:
        """Return string representation of EvalReport."""
        return f"metric={self.metric}, count={self.count}, aggregate={self.aggregate}"


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
@dataclass
class SweepPoint:
    """One trained model at one axis value."""

    axis_value: int
    model: str
    metric: float
    seconds: float
    params: int


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
@dataclass
class SweepResult:
    """Metric per axis value and model."""

    axis: str
    points: list[SweepPoint] = field(default_factory=list)
    # Hash of the validated configuration the sweep ran with.
    fingerprint: str = ""

    # ----------------------------------------------------------------------------
    def ordered(self) -> list[SweepPoint]:
        """Points sorted by axis value, then model name."""
        return sorted(self.points, key=lambda p: (p.axis_value, p.model))

    # ----------------------------------------------------------------------------
    def series(self, model: str) -> list[SweepPoint]:
        """Points of one model in axis order."""
        return [p for p in self.ordered() if p.model == model]
