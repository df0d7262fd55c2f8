"""Utilities."""

from collections.abc import Callable, Sequence
import logging
import time

import numpy as np

# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
_LOGGER = logging.getLogger(__name__)


# ----------------------------------------------------------------------------
# Random number utils
# ----------------------------------------------------------------------------
def derive_rng(seed: int, stream: int, index: int | None = None) -> np.random.Generator:
    """Return a PCG64 generator for (seed, stream[, index]).

    The counter scheme makes sample i independent of the samples generated
    before it, so generation can be split or reordered freely.
    """

    entropy = [int(seed), int(stream)] if index is None else [
        int(seed),
        int(stream),
        int(index),
    ]
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy)))


# ----------------------------------------------------------------------------
# Linear algebra utils
# ----------------------------------------------------------------------------
def sign_fix_columns(vectors: np.ndarray) -> np.ndarray:
    """Flip each column so that its largest-magnitude entry is positive."""

    if vectors.size == 0:
        return vectors

    pivots = np.argmax(np.abs(vectors), axis=0)
    signs = np.sign(vectors[pivots, np.arange(vectors.shape[1])])
    signs[signs == 0] = 1.0
    return vectors * signs


# ----------------------------------------------------------------------------
def block_apply(blocks: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Apply stacked blocks (n, p, q) to stacked columns (n, q, B).

    Products are accumulated one inner index at a time with elementwise
    operations only, so column b of the result never depends on the other
    columns of x.
    """

    out = blocks[:, :, 0, None] * x[:, None, 0, :]
    for j in range(1, blocks.shape[2]):
        out += blocks[:, :, j, None] * x[:, None, j, :]
    return out


# ----------------------------------------------------------------------------
# Fitting utils
# ----------------------------------------------------------------------------
def fit_power_law(x: Sequence[float], y: Sequence[float]) -> tuple[float, float]:
    """Fit y = c * x^p in log-log space and return (p, log c)."""

    slope, intercept = np.polyfit(np.log(np.asarray(x, dtype=float)), np.log(y), 1)
    return float(slope), float(intercept)


# ----------------------------------------------------------------------------
def linear_fit_r2(x: Sequence[float], y: Sequence[float]) -> tuple[float, float]:
    """Least-squares line through (x, y); return (slope, R^2).

    A perfect fit, including a constant y, has R^2 = 1.
    """

    xs = np.asarray(x, dtype=float)
    ys = np.asarray(y, dtype=float)
    slope, intercept = np.polyfit(xs, ys, 1)
    residual = float(np.sum((ys - (slope * xs + intercept)) ** 2))
    total = float(np.sum((ys - ys.mean()) ** 2))
    if total == 0.0:
        return float(slope), 1.0 if residual <= 1e-24 else 0.0
    return float(slope), 1.0 - residual / total


# ----------------------------------------------------------------------------
# Timing utils
# ----------------------------------------------------------------------------
def median_time_ns(fn: Callable[[], object], repetitions: int, warmup: int) -> int:
    """Median wall time of fn over repetitions after warmup calls."""

    for _ in range(warmup):
        fn()

    samples = []
    for _ in range(repetitions):
        start = time.perf_counter_ns()
        fn()
        samples.append(time.perf_counter_ns() - start)

    return int(np.median(samples))
