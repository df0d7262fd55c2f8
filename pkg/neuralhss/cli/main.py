# ruff: noqa: TID252
"""Command line entry point."""

import argparse
from collections.abc import Callable, Sequence
import json
import logging
from typing import Any

from ..config.config_utils import dump_config, load_config, resolve_config
from ..const import (
    CONF_OUT,
    CONF_SEED,
    CONF_THREADS,
    DEFAULT_LOG_LEVEL,
    EXIT_COMPUTE_FAILURE,
    EXIT_OK,
    EXIT_USAGE,
    LOG_LEVEL_LIST,
    NAME,
    VERSION,
    Command,
)
from ..exceptions.artifact_exception import ArtifactExceptionError
from ..exceptions.generation_exception import GenerationExceptionError
from ..exceptions.metric_exception import MetricExceptionError
from ..exceptions.structure_exception import StructureExceptionError
from ..exceptions.tape_exception import TapeExceptionError
from ..exceptions.training_exception import TrainingExceptionError
from ..exceptions.validation_exception import ValidationExceptionError
from .cmd_analysis import cmd_bench_matvec, cmd_kernel_rank_decay, cmd_plot
from .cmd_data import cmd_gen
from .cmd_experiments import cmd_data_efficiency, cmd_exact_recovery
from .cmd_train import cmd_eval, cmd_train

# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
_LOGGER = logging.getLogger(__name__)

CommandHandler = Callable[[dict[str, Any], dict[str, Any]], dict[str, Any]]

COMMANDS: dict[str, tuple[CommandHandler, str]] = {
    Command.GEN.value: (cmd_gen, "generate a dataset"),
    Command.TRAIN.value: (cmd_train, "train a model on a dataset"),
    Command.EVAL.value: (cmd_eval, "evaluate a saved model"),
    Command.DATA_EFFICIENCY.value: (
        cmd_data_efficiency,
        "train size sweep against the dense baseline",
    ),
    Command.EXACT_RECOVERY.value: (cmd_exact_recovery, "recover a random HSS operator"),
    Command.KERNEL_RANK_DECAY.value: (
        cmd_kernel_rank_decay,
        "epsilon-rank of admissible kernel blocks",
    ),
    Command.BENCH_MATVEC.value: (cmd_bench_matvec, "HSS against dense matvec timing"),
    Command.PLOT.value: (cmd_plot, "render a CSV table as SVG"),
}

# Failures of a correctly configured run.
COMPUTE_ERRORS = (
    ArtifactExceptionError,
    GenerationExceptionError,
    MetricExceptionError,
    StructureExceptionError,
    TapeExceptionError,
    TrainingExceptionError,
    OSError,
)


# ----------------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    """Parser with one subcommand per experiment; global flags on every subcommand."""

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON configuration file")
    common.add_argument("--seed", type=int, help="global seed")
    common.add_argument("--out", help="output directory")
    common.add_argument("--threads", type=int, help="worker processes for sweeps")
    common.add_argument(
        "--log-level", choices=LOG_LEVEL_LIST, default=DEFAULT_LOG_LEVEL
    )
    common.add_argument(
        "--dump-config",
        action="store_true",
        help="print the fully defaulted configuration and exit",
    )

    parser = argparse.ArgumentParser(prog="neuralhss", description=f"{NAME} toolkit")
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command, (_, help_text) in COMMANDS.items():
        subparsers.add_parser(command, parents=[common], help=help_text)
    return parser


# ----------------------------------------------------------------------------
def main(argv: Sequence[str] | None = None) -> int:
    """Run one subcommand and return the exit status."""

    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=args.log_level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    overrides = {CONF_SEED: args.seed, CONF_OUT: args.out, CONF_THREADS: args.threads}
    try:
        raw = load_config(args.config)
        if args.dump_config:
            print(dump_config(raw, args.command, overrides))  # noqa: T201
            return EXIT_OK

        global_config, section = resolve_config(raw, args.command, overrides)
        handler, _ = COMMANDS[args.command]
        summary = handler(global_config, section)
    except ValidationExceptionError as ex:
        _LOGGER.error("Invalid configuration in %s: %s", ex.base, ex.key)
        return EXIT_USAGE
    except COMPUTE_ERRORS as ex:
        _LOGGER.error("%s failed: %s", args.command, ex)
        return EXIT_COMPUTE_FAILURE

    print(json.dumps(summary, indent=4, sort_keys=True, default=str))  # noqa: T201
    return EXIT_OK
