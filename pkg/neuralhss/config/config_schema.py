# ruff: noqa: TID252
"""Voluptuous schemas for every subcommand section."""

import voluptuous as vol

from ..const import (
    BENCH_DENSE_MAX_EXTENT,
    BENCH_EXTENTS,
    BENCH_RANK,
    BENCH_REPETITIONS,
    BENCH_WARMUP,
    CONF_ALPHA_PENALTY,
    CONF_BATCH_SIZE,
    CONF_BETA,
    CONF_BETAS,
    CONF_CONTROL_SAMPLES,
    CONF_DATASET,
    CONF_DENSE_MAX_EXTENT,
    CONF_DEPTH,
    CONF_EPOCHS,
    CONF_EPS_ADAM,
    CONF_EQUATION,
    CONF_ETA,
    CONF_EVAL_EVERY,
    CONF_EXTENT,
    CONF_EXTENTS,
    CONF_FINAL_ACTIVATION,
    CONF_GRAD_CLIP_NORM,
    CONF_GRID_POINTS,
    CONF_HORIZON,
    CONF_INIT_SCALE,
    CONF_INPUT,
    CONF_KAPPA,
    CONF_KERNEL,
    CONF_LAYERS,
    CONF_LEVELS,
    CONF_LOG_X,
    CONF_LOG_Y,
    CONF_MAX_RESCALE,
    CONF_MIN_LR,
    CONF_MODEL,
    CONF_MODES,
    CONF_NAME,
    CONF_NU,
    CONF_OPTIMIZER,
    CONF_OUT,
    CONF_OUTER_RANK,
    CONF_OUTPUT,
    CONF_OUTPUT_POINTS,
    CONF_PEAK_LR,
    CONF_POINTS,
    CONF_QUADRATURE_ORDER,
    CONF_RANK,
    CONF_REPETITIONS,
    CONF_SAMPLES,
    CONF_SEED,
    CONF_SERIES,
    CONF_SHUFFLE_SEED,
    CONF_STRUCTURE,
    CONF_SUBSTEPS,
    CONF_SWEEP,
    CONF_TEST_SAMPLES,
    CONF_THREADS,
    CONF_TIME_STEP,
    CONF_TITLE,
    CONF_TOLERANCES,
    CONF_TRAIN_SAMPLES,
    CONF_WARMUP,
    CONF_WEIGHT_DECAY,
    CONF_X,
    CONF_Y,
    DATA_EFFICIENCY_SWEEP,
    DEFAULT_ALPHA_PENALTY,
    DEFAULT_BATCH_SIZE,
    DEFAULT_BETA1,
    DEFAULT_BETA2,
    DEFAULT_DATASET,
    DEFAULT_DEPTH,
    DEFAULT_EPOCHS,
    DEFAULT_EPS_ADAM,
    DEFAULT_EVAL_EVERY,
    DEFAULT_GEN_SAMPLES,
    DEFAULT_GRAD_CLIP_NORM,
    DEFAULT_INIT_SCALE,
    DEFAULT_LEVELS,
    DEFAULT_MIN_LR,
    DEFAULT_MODEL_DIR,
    DEFAULT_OUT,
    DEFAULT_OUTER_RANK,
    DEFAULT_PEAK_LR,
    DEFAULT_RANK,
    DEFAULT_SEED,
    DEFAULT_TEST_SAMPLES,
    DEFAULT_THREADS,
    DEFAULT_WEIGHT_DECAY,
    EQUATION_LIST,
    KERNEL_ETA,
    KERNEL_LIST,
    KERNEL_POINTS,
    KERNEL_QUADRATURE_ORDER,
    KERNEL_TOLERANCES,
    KERNEL_TREE_DEPTH,
    RECOVERY_ALPHA_PENALTY,
    RECOVERY_CONTROL_SAMPLES,
    RECOVERY_EPOCHS,
    RECOVERY_EXTENT,
    RECOVERY_LAYERS,
    RECOVERY_LEVELS,
    RECOVERY_MIN_LR,
    RECOVERY_PEAK_LR,
    RECOVERY_RANK,
    RECOVERY_TEST_SAMPLES,
    STRUCTURE_LIST,
    Command,
    Equation,
    Kernel,
    Structure,
)

# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
#####################################
# Value validators
#####################################
POSITIVE_INT = vol.All(vol.Coerce(int), vol.Range(min=1))
NON_NEGATIVE_INT = vol.All(vol.Coerce(int), vol.Range(min=0))
GRID_INT = vol.All(vol.Coerce(int), vol.Range(min=2))
POSITIVE_FLOAT = vol.All(vol.Coerce(float), vol.Range(min=0, min_included=False))
NON_NEGATIVE_FLOAT = vol.All(vol.Coerce(float), vol.Range(min=0))
UNIT_FLOAT = vol.All(vol.Coerce(float), vol.Range(min=0, max=1, max_included=False))
PATH_STRING = vol.All(str, vol.Length(min=1))


# ----------------------------------------------------------------------------
def _optional(validator) -> vol.Any:
    """Validator accepting None, meaning the equation default."""
    return vol.Any(None, validator)


# ----------------------------------------------------------------------------
def _sorted_unique(values: list) -> list:
    if sorted(set(values)) != list(values):
        msg = "values must be strictly increasing"
        raise vol.Invalid(msg)
    return values


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
#####################################
# Global
#####################################
GLOBAL_SCHEMA = {
    vol.Optional(CONF_SEED, default=DEFAULT_SEED): NON_NEGATIVE_INT,
    vol.Optional(CONF_OUT, default=DEFAULT_OUT): PATH_STRING,
    vol.Optional(CONF_THREADS, default=DEFAULT_THREADS): POSITIVE_INT,
}

#####################################
# Shared sections
#####################################
MODEL_SCHEMA = vol.Schema(
    {
        vol.Optional(CONF_STRUCTURE, default=Structure.HSS.value): vol.In(STRUCTURE_LIST),
        vol.Optional(CONF_DEPTH, default=DEFAULT_DEPTH): POSITIVE_INT,
        vol.Optional(CONF_LEVELS, default=DEFAULT_LEVELS): NON_NEGATIVE_INT,
        vol.Optional(CONF_RANK, default=DEFAULT_RANK): POSITIVE_INT,
        vol.Optional(CONF_OUTER_RANK, default=DEFAULT_OUTER_RANK): POSITIVE_INT,
        vol.Optional(CONF_INIT_SCALE, default=DEFAULT_INIT_SCALE): POSITIVE_FLOAT,
        vol.Optional(CONF_FINAL_ACTIVATION, default=False): bool,
        vol.Optional(CONF_MAX_RESCALE, default=True): bool,
    }
)


# ----------------------------------------------------------------------------
def optimizer_schema(
    epochs: int = DEFAULT_EPOCHS,
    batch_size: int | None = DEFAULT_BATCH_SIZE,
    peak_lr: float = DEFAULT_PEAK_LR,
    min_lr: float = DEFAULT_MIN_LR,
    weight_decay: float = DEFAULT_WEIGHT_DECAY,
    grad_clip_norm: float = DEFAULT_GRAD_CLIP_NORM,
    alpha_penalty: float = DEFAULT_ALPHA_PENALTY,
) -> vol.Schema:
    """Optimizer section with per-command defaults; batch_size None means full batch."""

    return vol.Schema(
        {
            vol.Optional(CONF_EPOCHS, default=epochs): NON_NEGATIVE_INT,
            vol.Optional(CONF_BATCH_SIZE, default=batch_size): _optional(POSITIVE_INT),
            vol.Optional(CONF_PEAK_LR, default=peak_lr): POSITIVE_FLOAT,
            vol.Optional(CONF_MIN_LR, default=min_lr): POSITIVE_FLOAT,
            vol.Optional(CONF_WEIGHT_DECAY, default=weight_decay): NON_NEGATIVE_FLOAT,
            vol.Optional(CONF_BETAS, default=[DEFAULT_BETA1, DEFAULT_BETA2]): vol.All(
                [UNIT_FLOAT], vol.Length(min=2, max=2)
            ),
            vol.Optional(CONF_EPS_ADAM, default=DEFAULT_EPS_ADAM): POSITIVE_FLOAT,
            vol.Optional(CONF_GRAD_CLIP_NORM, default=grad_clip_norm): NON_NEGATIVE_FLOAT,
            vol.Optional(CONF_ALPHA_PENALTY, default=alpha_penalty): NON_NEGATIVE_FLOAT,
            vol.Optional(CONF_SHUFFLE_SEED, default=None): _optional(NON_NEGATIVE_INT),
            vol.Optional(CONF_EVAL_EVERY, default=DEFAULT_EVAL_EVERY): NON_NEGATIVE_INT,
        }
    )


OPTIMIZER_SCHEMA = optimizer_schema()

# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
#####################################
# Subcommand sections
#####################################
GEN_SCHEMA = vol.Schema(
    {
        vol.Optional(CONF_EQUATION, default=Equation.POISSON_1D.value): vol.In(
            EQUATION_LIST
        ),
        vol.Optional(CONF_SAMPLES, default=DEFAULT_GEN_SAMPLES): POSITIVE_INT,
        vol.Optional(CONF_NAME, default=None): _optional(PATH_STRING),
        vol.Optional(CONF_GRID_POINTS, default=None): _optional(GRID_INT),
        vol.Optional(CONF_OUTPUT_POINTS, default=None): _optional(GRID_INT),
        vol.Optional(CONF_MODES, default=None): _optional(POSITIVE_INT),
        vol.Optional(CONF_KAPPA, default=None): _optional(POSITIVE_FLOAT),
        vol.Optional(CONF_NU, default=None): _optional(POSITIVE_FLOAT),
        vol.Optional(CONF_BETA, default=None): _optional(vol.Coerce(float)),
        vol.Optional(CONF_HORIZON, default=None): _optional(POSITIVE_FLOAT),
        vol.Optional(CONF_TIME_STEP, default=None): _optional(POSITIVE_FLOAT),
        vol.Optional(CONF_SUBSTEPS, default=None): _optional(POSITIVE_INT),
        vol.Optional(CONF_EXTENT, default=RECOVERY_EXTENT): POSITIVE_INT,
        vol.Optional(CONF_LEVELS, default=RECOVERY_LEVELS): NON_NEGATIVE_INT,
        vol.Optional(CONF_RANK, default=RECOVERY_RANK): POSITIVE_INT,
    }
)

TRAIN_SCHEMA = vol.Schema(
    {
        vol.Optional(CONF_DATASET, default=DEFAULT_DATASET): PATH_STRING,
        vol.Optional(CONF_NAME, default=DEFAULT_MODEL_DIR): PATH_STRING,
        vol.Optional(CONF_TEST_SAMPLES, default=DEFAULT_TEST_SAMPLES): NON_NEGATIVE_INT,
        vol.Optional(CONF_TRAIN_SAMPLES, default=None): _optional(POSITIVE_INT),
        vol.Optional(CONF_MODEL, default={}): MODEL_SCHEMA,
        vol.Optional(CONF_OPTIMIZER, default={}): OPTIMIZER_SCHEMA,
    }
)

EVAL_SCHEMA = vol.Schema(
    {
        vol.Optional(CONF_DATASET, default=DEFAULT_DATASET): PATH_STRING,
        vol.Optional(CONF_MODEL, default=DEFAULT_MODEL_DIR): PATH_STRING,
        # Evaluate on the held-out split of this size; 0 evaluates every sample.
        vol.Optional(CONF_TEST_SAMPLES, default=DEFAULT_TEST_SAMPLES): NON_NEGATIVE_INT,
        vol.Optional(CONF_NAME, default="eval"): PATH_STRING,
    }
)

DATA_EFFICIENCY_SCHEMA = vol.Schema(
    {
        vol.Optional(CONF_DATASET, default=DEFAULT_DATASET): PATH_STRING,
        vol.Optional(CONF_SWEEP, default=DATA_EFFICIENCY_SWEEP): vol.All(
            [POSITIVE_INT], vol.Length(min=1), _sorted_unique
        ),
        vol.Optional(CONF_TEST_SAMPLES, default=DEFAULT_TEST_SAMPLES): POSITIVE_INT,
        vol.Optional(CONF_MODEL, default={}): MODEL_SCHEMA,
        vol.Optional(CONF_OPTIMIZER, default={}): OPTIMIZER_SCHEMA,
    }
)

EXACT_RECOVERY_SCHEMA = vol.Schema(
    {
        vol.Optional(CONF_EXTENT, default=RECOVERY_EXTENT): POSITIVE_INT,
        vol.Optional(CONF_LEVELS, default=RECOVERY_LEVELS): NON_NEGATIVE_INT,
        vol.Optional(CONF_RANK, default=RECOVERY_RANK): POSITIVE_INT,
        vol.Optional(CONF_LAYERS, default=RECOVERY_LAYERS): POSITIVE_INT,
        # None means samples-per-rank * rank * levels.
        vol.Optional(CONF_SAMPLES, default=None): _optional(POSITIVE_INT),
        vol.Optional(CONF_CONTROL_SAMPLES, default=RECOVERY_CONTROL_SAMPLES): NON_NEGATIVE_INT,
        vol.Optional(CONF_TEST_SAMPLES, default=RECOVERY_TEST_SAMPLES): POSITIVE_INT,
        vol.Optional(CONF_OPTIMIZER, default={}): optimizer_schema(
            epochs=RECOVERY_EPOCHS,
            batch_size=None,
            peak_lr=RECOVERY_PEAK_LR,
            min_lr=RECOVERY_MIN_LR,
            weight_decay=0.0,
            grad_clip_norm=0.0,
            alpha_penalty=RECOVERY_ALPHA_PENALTY,
        ),
    }
)

KERNEL_RANK_DECAY_SCHEMA = vol.Schema(
    {
        vol.Optional(CONF_KERNEL, default=Kernel.LOG.value): vol.In(KERNEL_LIST),
        vol.Optional(CONF_POINTS, default=KERNEL_POINTS): POSITIVE_INT,
        vol.Optional(CONF_DEPTH, default=KERNEL_TREE_DEPTH): POSITIVE_INT,
        vol.Optional(CONF_ETA, default=KERNEL_ETA): POSITIVE_FLOAT,
        vol.Optional(CONF_TOLERANCES, default=KERNEL_TOLERANCES): vol.All(
            [POSITIVE_FLOAT], vol.Length(min=2)
        ),
        vol.Optional(CONF_QUADRATURE_ORDER, default=KERNEL_QUADRATURE_ORDER): POSITIVE_INT,
    }
)

BENCH_MATVEC_SCHEMA = vol.Schema(
    {
        vol.Optional(CONF_EXTENTS, default=BENCH_EXTENTS): vol.All(
            [POSITIVE_INT], vol.Length(min=2), _sorted_unique
        ),
        vol.Optional(CONF_RANK, default=BENCH_RANK): POSITIVE_INT,
        vol.Optional(CONF_REPETITIONS, default=BENCH_REPETITIONS): POSITIVE_INT,
        vol.Optional(CONF_WARMUP, default=BENCH_WARMUP): NON_NEGATIVE_INT,
        vol.Optional(CONF_DENSE_MAX_EXTENT, default=BENCH_DENSE_MAX_EXTENT): POSITIVE_INT,
    }
)

PLOT_SCHEMA = vol.Schema(
    {
        vol.Optional(CONF_INPUT, default="sweep.csv"): PATH_STRING,
        vol.Optional(CONF_OUTPUT, default=None): _optional(PATH_STRING),
        vol.Optional(CONF_X, default="train_size"): PATH_STRING,
        vol.Optional(CONF_Y, default="rel_l2"): PATH_STRING,
        vol.Optional(CONF_SERIES, default="model"): _optional(PATH_STRING),
        vol.Optional(CONF_LOG_X, default=True): bool,
        vol.Optional(CONF_LOG_Y, default=True): bool,
        vol.Optional(CONF_TITLE, default=None): _optional(str),
    }
)

COMMAND_SCHEMAS: dict[str, vol.Schema] = {
    Command.GEN.value: GEN_SCHEMA,
    Command.TRAIN.value: TRAIN_SCHEMA,
    Command.EVAL.value: EVAL_SCHEMA,
    Command.DATA_EFFICIENCY.value: DATA_EFFICIENCY_SCHEMA,
    Command.EXACT_RECOVERY.value: EXACT_RECOVERY_SCHEMA,
    Command.KERNEL_RANK_DECAY.value: KERNEL_RANK_DECAY_SCHEMA,
    Command.BENCH_MATVEC.value: BENCH_MATVEC_SCHEMA,
    Command.PLOT.value: PLOT_SCHEMA,
}
