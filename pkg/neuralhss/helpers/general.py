# ruff: noqa: TID252
"""General helpers."""

from collections.abc import Sequence
import logging

import numpy as np

from ..exceptions.structure_exception import StructureExceptionError

# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
_LOGGER = logging.getLogger(__name__)


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
class Validator:
    """Validator class."""

    # ----------------------------------------------------------------------------
    @staticmethod
    def is_finite(array: np.ndarray) -> bool:
        """Check that every entry is finite."""
        return bool(np.all(np.isfinite(array)))

    # ----------------------------------------------------------------------------
    @staticmethod
    def check_shape(array: np.ndarray, shape: Sequence[int], what: str) -> None:
        """Raise unless array has exactly the given shape."""

        if tuple(array.shape) != tuple(shape):
            msg = f"{what} has shape {tuple(array.shape)}, expected {tuple(shape)}"
            raise StructureExceptionError(msg)

    # ----------------------------------------------------------------------------
    @staticmethod
    def check_trailing(array: np.ndarray, trailing: Sequence[int], what: str) -> None:
        """Raise unless the trailing extents of array equal trailing."""

        count = len(trailing)
        if array.ndim < count + 1 or tuple(array.shape[-count:]) != tuple(trailing):
            msg = (
                f"{what} has shape {tuple(array.shape)}, expected a batch of "
                f"{tuple(trailing)}"
            )
            raise StructureExceptionError(msg)

    # ----------------------------------------------------------------------------
    @staticmethod
    def check_same_shape(left: np.ndarray, right: np.ndarray, what: str) -> None:
        """Raise unless both arrays share one shape."""

        if left.shape != right.shape:
            msg = f"{what}: shape {left.shape} does not match {right.shape}"
            raise StructureExceptionError(msg)
