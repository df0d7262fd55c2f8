# ruff: noqa: TID252
"""kernel-rank-decay, bench-matvec and plot."""

import logging
import math
from typing import Any

import numpy as np
import pandas as pd

from ..const import (
    COL_BLOCK,
    COL_EPS_RANK,
    COL_EXTENT,
    COL_MEDIAN_NS,
    COL_REPS,
    COL_STRUCTURE,
    COL_TOLERANCE,
    CONF_DENSE_MAX_EXTENT,
    CONF_DEPTH,
    CONF_ETA,
    CONF_EXTENTS,
    CONF_INPUT,
    CONF_KERNEL,
    CONF_LOG_X,
    CONF_LOG_Y,
    CONF_OUTPUT,
    CONF_POINTS,
    CONF_QUADRATURE_ORDER,
    CONF_RANK,
    CONF_REPETITIONS,
    CONF_SEED,
    CONF_SERIES,
    CONF_TITLE,
    CONF_TOLERANCES,
    CONF_WARMUP,
    CONF_X,
    CONF_Y,
    SEED_STREAM_BENCH,
    Command,
    Structure,
)
from ..exceptions.structure_exception import StructureExceptionError
from ..helpers.utils import derive_rng, fit_power_law, linear_fit_r2, median_time_ns
from ..hss.cluster_tree import admissible_pairs, build_balanced_tree
from ..hss.compression import epsilon_rank
from ..hss.hss_ops import hss_matvec, hss_param_count, hss_random
from ..hss.kernels import kernel_block
from ..models.model_hss import ClusterTree
from .cli_utils import resolve_path
from .plotting import plot_series, read_table

# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
_LOGGER = logging.getLogger(__name__)

RANKS_CSV = "ranks.csv"
RANKS_SVG = "ranks.svg"
TIMING_CSV = "timing.csv"
TIMING_SVG = "timing.svg"
COL_LEVEL = "level"
COL_LOG_INVERSE_EPS = "log10_inv_eps"
# Rank growth from the loosest to the tightest tolerance stays below this factor.
MAX_RANK_RATIO = 4.0


# ----------------------------------------------------------------------------
# Kernel rank decay
# ----------------------------------------------------------------------------
def block_ranks(section: dict[str, Any]) -> pd.DataFrame:
    """epsilon-rank of every admissible block at every tolerance, long format."""

    points = section[CONF_POINTS]
    tree = build_balanced_tree(points, section[CONF_DEPTH])
    rows = []
    for block, (level, first, second) in enumerate(
        admissible_pairs(tree, section[CONF_ETA])
    ):
        matrix = kernel_block(
            section[CONF_KERNEL], first, second, points, section[CONF_QUADRATURE_ORDER]
        )
        rows.extend(
            {
                COL_BLOCK: block,
                COL_LEVEL: level,
                COL_TOLERANCE: eps,
                COL_LOG_INVERSE_EPS: math.log10(1.0 / eps),
                COL_EPS_RANK: epsilon_rank(matrix, eps),
            }
            for eps in section[CONF_TOLERANCES]
        )
    return pd.DataFrame(
        rows, columns=[COL_BLOCK, COL_LEVEL, COL_TOLERANCE, COL_LOG_INVERSE_EPS, COL_EPS_RANK]
    )


# ----------------------------------------------------------------------------
def rank_fit(frame: pd.DataFrame) -> dict[str, float]:
    """Per-block linear fit of rank against log10(1 / eps), averaged."""

    slopes, r2s, ratios = [], [], []
    for _, block in frame.groupby(COL_BLOCK, sort=True):
        block = block.sort_values(COL_LOG_INVERSE_EPS)
        slope, r2 = linear_fit_r2(block[COL_LOG_INVERSE_EPS], block[COL_EPS_RANK])
        slopes.append(slope)
        r2s.append(r2)
        ranks = block[COL_EPS_RANK].to_numpy()
        ratios.append(ranks[-1] / max(ranks[0], 1))

    if not slopes:
        msg = "No admissible blocks; lower the tree depth or raise eta"
        raise StructureExceptionError(msg)

    return {
        "blocks": len(slopes),
        "mean_slope": float(np.mean(slopes)),
        "mean_r2": float(np.mean(r2s)),
        "max_rank_ratio": float(np.max(ratios)),
        "rank_ratio_ok": bool(np.max(ratios) <= MAX_RANK_RATIO),
    }


# ----------------------------------------------------------------------------
def cmd_kernel_rank_decay(
    global_config: dict[str, Any], section: dict[str, Any]
) -> dict[str, Any]:
    """Rank of admissible kernel blocks against the tolerance."""

    frame = block_ranks(section)
    summary = rank_fit(frame)
    _LOGGER.info("kernel-rank-decay: %s, %s", section[CONF_KERNEL], summary)

    out = resolve_path(global_config, Command.KERNEL_RANK_DECAY.value)
    out.mkdir(parents=True, exist_ok=True)
    frame.to_csv(out / RANKS_CSV, index=False, float_format="%.17g")

    mean_ranks = (
        frame.groupby([COL_LEVEL, COL_LOG_INVERSE_EPS], as_index=False)[COL_EPS_RANK]
        .mean()
        .assign(**{COL_LEVEL: lambda f: "level_" + f[COL_LEVEL].astype(str)})
    )
    plot_series(
        mean_ranks,
        out / RANKS_SVG,
        COL_LOG_INVERSE_EPS,
        COL_EPS_RANK,
        COL_LEVEL,
        title=f"epsilon-rank of admissible {section[CONF_KERNEL]} kernel blocks",
    )
    return {"path": str(out), "kernel": section[CONF_KERNEL], **summary}


# ----------------------------------------------------------------------------
# Matvec scaling
# ----------------------------------------------------------------------------
def bench_levels(extent: int, rank: int) -> int:
    """Tree depth giving leaves of 2 * rank indices."""

    leaf = 2 * rank
    levels = (extent // leaf).bit_length() - 1
    if extent % leaf or leaf << levels != extent:
        msg = f"Extent {extent} is not 2 * rank * 2^L for rank {rank}"
        raise StructureExceptionError(msg)
    return levels


# ----------------------------------------------------------------------------
def cmd_bench_matvec(
    global_config: dict[str, Any], section: dict[str, Any]
) -> dict[str, Any]:
    """Median matvec times of HSS and dense operators across extents."""

    seed = global_config[CONF_SEED]
    rank = section[CONF_RANK]
    repetitions = section[CONF_REPETITIONS]
    rows = []
    params = []
    for extent in section[CONF_EXTENTS]:
        matrix = hss_random(ClusterTree(extent, bench_levels(extent, rank)), rank, seed)
        rng = derive_rng(seed, SEED_STREAM_BENCH, extent)
        x = rng.standard_normal(extent)
        params.append(hss_param_count(matrix))

        timings = {
            Structure.HSS.value: median_time_ns(
                lambda m=matrix, v=x: hss_matvec(m, v), repetitions, section[CONF_WARMUP]
            )
        }
        if extent <= section[CONF_DENSE_MAX_EXTENT]:
            # Entries do not affect the timing.
            dense = rng.standard_normal((extent, extent))
            timings[Structure.DENSE.value] = median_time_ns(
                lambda a=dense, v=x: a @ v, repetitions, section[CONF_WARMUP]
            )
            del dense
        else:
            _LOGGER.warning("bench-matvec: skipping dense matvec at d=%s", extent)

        for structure, median in timings.items():
            rows.append(
                {
                    COL_EXTENT: extent,
                    COL_STRUCTURE: structure,
                    COL_MEDIAN_NS: median,
                    COL_REPS: repetitions,
                }
            )
        _LOGGER.info("bench-matvec: d=%s, %s", extent, timings)

    frame = pd.DataFrame(rows, columns=[COL_EXTENT, COL_STRUCTURE, COL_MEDIAN_NS, COL_REPS])
    exponents = {}
    for structure, group in frame.groupby(COL_STRUCTURE, sort=True):
        if len(group) >= 2:
            exponents[structure], _ = fit_power_law(group[COL_EXTENT], group[COL_MEDIAN_NS])
    param_exponent, _ = fit_power_law(section[CONF_EXTENTS], params)

    out = resolve_path(global_config, Command.BENCH_MATVEC.value)
    out.mkdir(parents=True, exist_ok=True)
    frame.to_csv(out / TIMING_CSV, index=False)
    plot_series(
        frame,
        out / TIMING_SVG,
        COL_EXTENT,
        COL_MEDIAN_NS,
        COL_STRUCTURE,
        log_x=True,
        log_y=True,
        title=f"Matvec time at rank {rank}",
    )
    return {
        "path": str(out),
        "exponents": exponents,
        "parameter_exponent": param_exponent,
    }


# ----------------------------------------------------------------------------
# Plot
# ----------------------------------------------------------------------------
def cmd_plot(global_config: dict[str, Any], section: dict[str, Any]) -> dict[str, Any]:
    """Render a CSV table as an SVG line chart."""

    source = resolve_path(global_config, section[CONF_INPUT])
    target = (
        resolve_path(global_config, section[CONF_OUTPUT])
        if section[CONF_OUTPUT]
        else source.with_suffix(".svg")
    )
    output = plot_series(
        read_table(source),
        target,
        section[CONF_X],
        section[CONF_Y],
        section[CONF_SERIES],
        section[CONF_LOG_X],
        section[CONF_LOG_Y],
        section[CONF_TITLE],
    )
    return {"path": str(output)}
