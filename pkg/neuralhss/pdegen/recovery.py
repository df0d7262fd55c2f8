# ruff: noqa: TID252
"""Synthetic operator-learning data from a known HSS operator."""

import logging

import numpy as np

from ..const import SEED_STREAM_RECOVERY, VERSION, Equation
from ..helpers.utils import derive_rng
from ..hss.hss_ops import hss_matvec_batch, hss_random
from ..models.model_dataset import Dataset, GridSpec
from ..models.model_hss import ClusterTree, HssMatrix

# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
_LOGGER = logging.getLogger(__name__)


# ----------------------------------------------------------------------------
def gen_hss_recovery_dataset(
    d: int,
    levels: int,
    rank: int,
    n: int,
    seed: int,
    scale: float = 1.0,
) -> tuple[Dataset, HssMatrix]:
    """Gaussian inputs b_i and targets u_i = A b_i for a random HSS operator A.

    A is drawn by hss_random from seed alone; the inputs come from per-sample
    streams, so sample i does not depend on n.
    """

    truth = hss_random(ClusterTree(d, levels), rank, seed, scale)
    inputs = np.empty((n, d))
    for i in range(n):
        inputs[i] = derive_sample(seed, i, d)

    targets = hss_matvec_batch(truth, inputs.T).T
    dataset = Dataset(
        inputs,
        np.ascontiguousarray(targets),
        GridSpec((d,), (d,)),
        {
            "equation": Equation.HSS_RECOVERY.value,
            "seed": seed,
            "levels": levels,
            "rank": rank,
            "scale": scale,
            "generator_version": VERSION,
        },
    )
    _LOGGER.info("gen_hss_recovery_dataset: %s, truth=%s", dataset, truth)
    return dataset, truth


# ----------------------------------------------------------------------------
def derive_sample(seed: int, index: int, d: int) -> np.ndarray:
    """Standard Gaussian input vector number index."""

    return derive_rng(seed, SEED_STREAM_RECOVERY, index).standard_normal(d)
