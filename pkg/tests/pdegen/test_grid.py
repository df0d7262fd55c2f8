"""Tests for grid helpers and the dataset model."""

import numpy as np
import pytest

from neuralhss.exceptions.structure_exception import StructureExceptionError
from neuralhss.models.model_dataset import Dataset, GridSpec
from neuralhss.pdegen.grid import downsample, split_indices, unit_grid

from tests.helpers.factories import decay_trajectories, pair_dataset


def test_unit_grid_includes_both_ends():
    """Nodes run from 0 to 1 inclusive."""

    x = unit_grid(5)
    np.testing.assert_array_equal(x, [0.0, 0.25, 0.5, 0.75, 1.0])


def test_downsample_keeps_first_of_each_stride():
    """Index 0 of every stride survives, on the trailing modes only."""

    t = np.arange(2 * 4 * 6).reshape(2, 4, 6)

    np.testing.assert_array_equal(downsample(t, 3), t[:, :, ::3])
    np.testing.assert_array_equal(downsample(t, (2, 3)), t[:, ::2, ::3])
    assert downsample(t, (2, 3)).flags["C_CONTIGUOUS"]


@pytest.mark.parametrize("factors", [4, (5, 2), (1, 2, 3, 4), 0])
def test_downsample_rejects_bad_factors(factors):
    """Factors must divide their extents and fit the tensor order."""

    with pytest.raises(StructureExceptionError):
        downsample(np.zeros((2, 4, 6)), factors)


def test_split_is_disjoint_sorted_and_deterministic():
    """Held-out indices come from the seed alone."""

    train, test = split_indices(20, 5, seed=3)

    assert test.size == 5
    assert train.size == 15
    assert np.all(np.diff(train) > 0)
    assert np.all(np.diff(test) > 0)
    assert set(train) | set(test) == set(range(20))
    assert not set(train) & set(test)
    np.testing.assert_array_equal(split_indices(20, 5, seed=3)[1], test)
    assert not np.array_equal(split_indices(20, 5, seed=4)[1], test)


def test_split_rejects_impossible_hold_out():
    """Cannot hold out more than everything."""

    with pytest.raises(StructureExceptionError):
        split_indices(4, 5, seed=0)


def test_grid_spec():
    """Strides, spacing and dict form."""

    grid = GridSpec((64,), (256,))

    assert grid.dims == 1
    assert grid.factors == (4,)
    assert grid.spacing == (1.0 / 255,)
    assert GridSpec.from_dict(grid.to_dict()) == grid


@pytest.mark.parametrize(
    ("extents", "generation"), [((64,), (100,)), ((1,), (4,)), ((8, 8), (8,))]
)
def test_grid_spec_rejects_non_strides(extents, generation):
    """Stored extents must evenly subsample the generation grid."""

    with pytest.raises(StructureExceptionError):
        GridSpec(extents, generation)


def test_subset_records_indices():
    """Subsets keep the grid and remember where they came from."""

    data = pair_dataset(count=6)
    part = data.subset(np.array([4, 1]))

    np.testing.assert_array_equal(part.inputs, data.inputs[[4, 1]])
    assert part.meta["indices"] == [4, 1]
    assert part.grid is data.grid

    trajectories = decay_trajectories().subset(np.array([2]))
    assert trajectories.size == 1
    assert trajectories.meta["indices"] == [2]


def test_dataset_counts_must_match():
    """One target per input."""

    with pytest.raises(StructureExceptionError):
        Dataset(np.zeros((3, 4)), np.zeros((2, 4)), GridSpec((4,), (4,)))
