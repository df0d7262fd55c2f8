"""Constants for the Neural-HSS toolkit."""

from enum import Enum

NAME = "NeuralHSS"
# Also need to set version in manifest.json.
VERSION = "0.1.0"

# Artifact layout
SCHEMA_VERSION = "1.0"
MANIFEST_FILE = "manifest.json"
PARAMETER_FILE = "parameters.f8"
TENSOR_SUFFIX = ".f8"
# Little-endian IEEE-754 double precision, row-major.
FLOAT_DTYPE = "<f8"
SVG_HASH_SALT = "neuralhss"

# Exit status
EXIT_OK = 0
EXIT_COMPUTE_FAILURE = 1
EXIT_USAGE = 2


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
class Equation(Enum):
    """Dataset equations."""

    POISSON_1D = "poisson1d"
    POISSON_2D = "poisson2d"
    POISSON_3D = "poisson3d"
    HEAT_1D = "heat1d"
    BURGERS_1D = "burgers1d"
    HSS_RECOVERY = "hss_recovery"


EQUATION_LIST: list[str] = [equation.value for equation in Equation]


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
class Structure(Enum):
    """Layer structure of a model."""

    HSS = "hss"
    ND_HSS = "nd_hss"
    DENSE = "dense"


STRUCTURE_LIST: list[str] = [structure.value for structure in Structure]


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
class MapVariant(Enum):
    """Coefficient storage of a linear tensor map."""

    DENSE = "dense"
    CP = "cp"


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
class Kernel(Enum):
    """Translation invariant kernels for the rank decay check."""

    LOG = "log"
    INVERSE = "inverse"


KERNEL_LIST: list[str] = [kernel.value for kernel in Kernel]


# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
class Command(Enum):
    """CLI subcommands."""

    GEN = "gen"
    TRAIN = "train"
    EVAL = "eval"
    DATA_EFFICIENCY = "data-efficiency"
    EXACT_RECOVERY = "exact-recovery"
    KERNEL_RANK_DECAY = "kernel-rank-decay"
    BENCH_MATVEC = "bench-matvec"
    PLOT = "plot"


COMMAND_LIST: list[str] = [command.value for command in Command]

#####################################
# Seed streams
#####################################
# Every random draw uses numpy's PCG64 seeded with SeedSequence([seed, stream, index]),
# so sample i of a dataset does not depend on how many samples came before it.
SEED_STREAM_HSS_INIT = 1
SEED_STREAM_POISSON_1D = 11
SEED_STREAM_POISSON_2D = 12
SEED_STREAM_POISSON_3D = 13
SEED_STREAM_HEAT_1D = 14
SEED_STREAM_BURGERS_1D = 15
SEED_STREAM_RECOVERY = 16
SEED_STREAM_SPLIT = 21
SEED_STREAM_SHUFFLE = 22
SEED_STREAM_MODEL = 31
SEED_STREAM_BENCH = 41

#####################################
# Data generation defaults
#####################################
SOURCE_MODES = 10

POISSON_1D_GRID_POINTS = 1024
POISSON_1D_OUTPUT_POINTS = 256
# f is zeroed on this many grid points at each end of the domain.
POISSON_1D_ZEROED_POINTS = 2
POISSON_1D_CLOSURE = "one_sided_five_point_third_order"

POISSON_2D_GRID_POINTS = 128
POISSON_2D_OUTPUT_POINTS = 64
POISSON_2D_STENCIL = "nine_point_mehrstellen"

POISSON_3D_GRID_POINTS = 32
POISSON_3D_STENCIL = "nineteen_point"
POISSON_3D_MODES = 4

HEAT_KAPPA = 0.0002
HEAT_HORIZON = 8.0
HEAT_TIME_STEP = 0.2
HEAT_GRID_POINTS = 1024
HEAT_OUTPUT_POINTS = 256
HEAT_ORACLE_STEP = 1e-3

BURGERS_NU = 0.001
BURGERS_BETA = 1.0
BURGERS_HORIZON = 15.0
BURGERS_TIME_STEP = 0.2
BURGERS_GRID_POINTS = 1024
BURGERS_OUTPUT_POINTS = 256
# 0.2 / 250 = 8e-4 keeps the diffusion number nu*dt/h^2 below one on 1024 points.
BURGERS_SUBSTEPS = 250
NEWTON_TOLERANCE = 1e-12
NEWTON_MAX_ITERATIONS = 30

RESIDUAL_TOLERANCE_POISSON = 1e-8

#####################################
# Model defaults (1D Poisson table)
#####################################
DEFAULT_DEPTH = 3
DEFAULT_LEVELS = 3
DEFAULT_RANK = 2
DEFAULT_OUTER_RANK = 8
DEFAULT_INIT_SCALE = 1.0
DEFAULT_ALPHA = 1.0

#####################################
# Training defaults (1D Poisson table)
#####################################
DEFAULT_EPOCHS = 500
DEFAULT_BATCH_SIZE = 256
DEFAULT_PEAK_LR = 1e-3
DEFAULT_MIN_LR = 1e-5
DEFAULT_WEIGHT_DECAY = 1e-3
DEFAULT_BETA1 = 0.9
DEFAULT_BETA2 = 0.99
DEFAULT_EPS_ADAM = 1e-8
DEFAULT_GRAD_CLIP_NORM = 1.0
DEFAULT_ALPHA_PENALTY = 0.0
DEFAULT_EVAL_EVERY = 10
DEFAULT_TEST_SAMPLES = 200

DEFAULT_SEED = 0
DEFAULT_OUT = "out"
DEFAULT_THREADS = 1
DEFAULT_GEN_SAMPLES = 1200
DEFAULT_DATASET = "poisson1d"
DEFAULT_MODEL_DIR = "model"
DEFAULT_LOG_LEVEL = "INFO"
LOG_LEVEL_LIST: list[str] = ["DEBUG", "INFO", "WARNING", "ERROR"]

#####################################
# Experiment defaults
#####################################
DATA_EFFICIENCY_SWEEP = [10, 32, 100, 316, 1000]
DENSE_BASELINE_TOLERANCE = 0.10

RECOVERY_EXTENT = 32
RECOVERY_LEVELS = 2
RECOVERY_RANK = 2
RECOVERY_LAYERS = 1
RECOVERY_SAMPLES_PER_RANK = 20
RECOVERY_CONTROL_SAMPLES = 2
RECOVERY_TEST_SAMPLES = 200
RECOVERY_ALPHA_PENALTY = 1.0
RECOVERY_EPOCHS = 3000
RECOVERY_PEAK_LR = 1e-2
RECOVERY_MIN_LR = 1e-6
# Training MSE below this counts as exact recovery.
RECOVERY_MSE_THRESHOLD = 1e-8

KERNEL_POINTS = 512
KERNEL_TREE_DEPTH = 4
KERNEL_ETA = 1.0
KERNEL_QUADRATURE_ORDER = 4
KERNEL_TOLERANCES = [1e-2, 1e-4, 1e-6, 1e-8]

BENCH_EXTENTS = [256, 1024, 4096, 16384]
BENCH_RANK = 4
BENCH_REPETITIONS = 20
BENCH_WARMUP = 3
# Dense d x d matrices above this extent are skipped.
BENCH_DENSE_MAX_EXTENT = 16384

#####################################
# Config keys
#####################################
CONF_SEED = "seed"
CONF_OUT = "out"
CONF_THREADS = "threads"

CONF_EQUATION = "equation"
CONF_SAMPLES = "samples"
CONF_GRID_POINTS = "grid_points"
CONF_OUTPUT_POINTS = "output_points"
CONF_MODES = "modes"
CONF_KAPPA = "kappa"
CONF_NU = "nu"
CONF_BETA = "beta"
CONF_HORIZON = "horizon"
CONF_TIME_STEP = "time_step"
CONF_SUBSTEPS = "substeps"
CONF_EXTENT = "extent"
CONF_LEVELS = "levels"
CONF_RANK = "rank"
CONF_NAME = "name"

CONF_DATASET = "dataset"
CONF_MODEL = "model"
CONF_OPTIMIZER = "optimizer"
CONF_STRUCTURE = "structure"
CONF_DEPTH = "depth"
CONF_OUTER_RANK = "outer_rank"
CONF_FINAL_ACTIVATION = "final_activation"
CONF_INIT_SCALE = "init_scale"
CONF_MAX_RESCALE = "max_rescale"
CONF_TEST_SAMPLES = "test_samples"
CONF_TRAIN_SAMPLES = "train_samples"

CONF_EPOCHS = "epochs"
CONF_BATCH_SIZE = "batch_size"
CONF_PEAK_LR = "peak_lr"
CONF_MIN_LR = "min_lr"
CONF_WEIGHT_DECAY = "weight_decay"
CONF_BETAS = "betas"
CONF_EPS_ADAM = "eps_adam"
CONF_GRAD_CLIP_NORM = "grad_clip_norm"
CONF_ALPHA_PENALTY = "alpha_penalty"
CONF_SHUFFLE_SEED = "shuffle_seed"
CONF_EVAL_EVERY = "eval_every"

CONF_SWEEP = "sweep"
CONF_LAYERS = "layers"
CONF_CONTROL_SAMPLES = "control_samples"
CONF_KERNEL = "kernel"
CONF_POINTS = "points"
CONF_ETA = "eta"
CONF_TOLERANCES = "tolerances"
CONF_QUADRATURE_ORDER = "quadrature_order"
CONF_EXTENTS = "extents"
CONF_REPETITIONS = "repetitions"
CONF_WARMUP = "warmup"
CONF_X = "x"
CONF_Y = "y"
CONF_SERIES = "series"
CONF_LOG_X = "log_x"
CONF_LOG_Y = "log_y"
CONF_TITLE = "title"
CONF_INPUT = "input"
CONF_OUTPUT = "output"
CONF_DENSE_MAX_EXTENT = "dense_max_extent"

#####################################
# CSV columns
#####################################
COL_EPOCH = "epoch"
COL_STEP = "step"
COL_LR = "lr"
COL_TRAIN_LOSS = "train_loss"
COL_EVAL_METRIC = "eval_metric"
COL_SAMPLE_INDEX = "sample_index"
COL_VALUE = "value"
COL_MODEL = "model"
COL_TRAIN_SIZE = "train_size"
COL_REL_L2 = "rel_l2"
COL_SECONDS = "seconds"
COL_PARAMS = "params"
COL_EXTENT = "d"
COL_STRUCTURE = "structure"
COL_MEDIAN_NS = "median_ns"
COL_REPS = "reps"
COL_TOLERANCE = "eps"
COL_BLOCK = "block"
COL_EPS_RANK = "rank"
AGGREGATE_ROW = "mean"
