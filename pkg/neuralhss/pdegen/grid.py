# ruff: noqa: TID252
"""Grid helpers shared by the generators."""

from collections.abc import Sequence
import logging

import numpy as np

from ..const import SEED_STREAM_SPLIT
from ..exceptions.structure_exception import StructureExceptionError
from ..helpers.utils import derive_rng

# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
_LOGGER = logging.getLogger(__name__)


# ----------------------------------------------------------------------------
def unit_grid(points: int) -> np.ndarray:
    """points equispaced nodes on [0, 1], both ends included."""
    return np.linspace(0.0, 1.0, points)


# ----------------------------------------------------------------------------
def downsample(t: np.ndarray, factors: int | Sequence[int]) -> np.ndarray:
    """Strided subsample of the trailing modes keeping index 0 of every stride.

    An int factor applies to the last axis; a sequence applies to the last
    len(factors) axes in order.
    """

    steps = (factors,) if isinstance(factors, int) else tuple(factors)
    if len(steps) > t.ndim:
        msg = f"downsample: {len(steps)} factors for a {t.ndim}-D tensor"
        raise StructureExceptionError(msg)

    index: list[slice] = [slice(None)] * (t.ndim - len(steps))
    for axis, factor in zip(range(t.ndim - len(steps), t.ndim), steps, strict=True):
        if factor < 1 or t.shape[axis] % factor != 0:
            msg = f"downsample: factor {factor} does not divide extent {t.shape[axis]}"
            raise StructureExceptionError(msg)
        index.append(slice(None, None, factor))

    return np.ascontiguousarray(t[tuple(index)])


# ----------------------------------------------------------------------------
def split_indices(
    count: int, test_count: int, seed: int
) -> tuple[np.ndarray, np.ndarray]:
    """Random disjoint (train, test) index sets, each sorted."""

    if not 0 <= test_count <= count:
        msg = f"split_indices: cannot hold out {test_count} of {count} samples"
        raise StructureExceptionError(msg)

    order = derive_rng(seed, SEED_STREAM_SPLIT).permutation(count)
    test = np.sort(order[:test_count])
    train = np.sort(order[test_count:])
    _LOGGER.debug("split_indices: train=%s, test=%s", train.size, test.size)
    return train, test
