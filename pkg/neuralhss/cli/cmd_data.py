# ruff: noqa: TID252
"""gen: dispatch to the dataset generators."""

from collections.abc import Callable
import logging
from typing import Any

from ..const import (
    CONF_BETA,
    CONF_EQUATION,
    CONF_EXTENT,
    CONF_GRID_POINTS,
    CONF_HORIZON,
    CONF_KAPPA,
    CONF_LEVELS,
    CONF_MODES,
    CONF_NAME,
    CONF_NU,
    CONF_OUTPUT_POINTS,
    CONF_RANK,
    CONF_SAMPLES,
    CONF_SEED,
    CONF_SUBSTEPS,
    CONF_TIME_STEP,
    RESIDUAL_TOLERANCE_POISSON,
    Command,
    Equation,
)
from ..exceptions.validation_exception import ValidationExceptionError
from ..models.model_dataset import Dataset, TrajectoryDataset
from ..pdegen.burgers import gen_burgers_1d
from ..pdegen.heat import gen_heat_1d
from ..pdegen.poisson import gen_poisson_1d, gen_poisson_2d, gen_poisson_3d
from ..pdegen.recovery import gen_hss_recovery_dataset
from ..pdegen.storage import save_dataset
from .cli_utils import resolve_path

# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
_LOGGER = logging.getLogger(__name__)

_GRID_KEYS = [CONF_GRID_POINTS, CONF_OUTPUT_POINTS, CONF_MODES]

# Optional gen keys each equation accepts; a key set for another equation is rejected.
EQUATION_KEYS: dict[str, list[str]] = {
    Equation.POISSON_1D.value: _GRID_KEYS,
    Equation.POISSON_2D.value: _GRID_KEYS,
    Equation.POISSON_3D.value: _GRID_KEYS,
    Equation.HEAT_1D.value: [*_GRID_KEYS, CONF_KAPPA, CONF_HORIZON, CONF_TIME_STEP],
    Equation.BURGERS_1D.value: [
        *_GRID_KEYS,
        CONF_NU,
        CONF_BETA,
        CONF_HORIZON,
        CONF_TIME_STEP,
        CONF_SUBSTEPS,
    ],
    Equation.HSS_RECOVERY.value: [],
}

GENERATORS: dict[str, Callable[..., Dataset | TrajectoryDataset]] = {
    Equation.POISSON_1D.value: gen_poisson_1d,
    Equation.POISSON_2D.value: gen_poisson_2d,
    Equation.POISSON_3D.value: gen_poisson_3d,
    Equation.HEAT_1D.value: gen_heat_1d,
    Equation.BURGERS_1D.value: gen_burgers_1d,
}

_ALL_KEYS = sorted({key for keys in EQUATION_KEYS.values() for key in keys})


# ----------------------------------------------------------------------------
def _generator_kwargs(section: dict[str, Any]) -> dict[str, Any]:
    equation = section[CONF_EQUATION]
    accepted = EQUATION_KEYS[equation]
    for key in _ALL_KEYS:
        if section[key] is not None and key not in accepted:
            _LOGGER.error("gen: %s does not take %s", equation, key)
            raise ValidationExceptionError(Command.GEN.value, key)
    return {key: section[key] for key in accepted if section[key] is not None}


# ----------------------------------------------------------------------------
def generate(section: dict[str, Any], seed: int) -> Dataset | TrajectoryDataset:
    """Run the generator selected by the gen section."""

    equation = section[CONF_EQUATION]
    kwargs = _generator_kwargs(section)
    if equation == Equation.HSS_RECOVERY.value:
        dataset, _ = gen_hss_recovery_dataset(
            section[CONF_EXTENT],
            section[CONF_LEVELS],
            section[CONF_RANK],
            section[CONF_SAMPLES],
            seed,
        )
        return dataset
    return GENERATORS[equation](section[CONF_SAMPLES], seed, **kwargs)


# ----------------------------------------------------------------------------
def dataset_summary(dataset: Dataset | TrajectoryDataset) -> dict[str, Any]:
    """Sample count, array shapes and the residual check outcome."""

    summary: dict[str, Any] = {
        "equation": dataset.meta.get("equation"),
        "samples": dataset.size,
        "shapes": {name: list(array.shape) for name, array in dataset.arrays().items()},
    }
    if "max_residual" in dataset.meta:
        worst = dataset.meta["max_residual"]
        summary["max_residual"] = worst
        summary["residual_check"] = "pass" if worst <= RESIDUAL_TOLERANCE_POISSON else "fail"
    return summary


# ----------------------------------------------------------------------------
def cmd_gen(global_config: dict[str, Any], section: dict[str, Any]) -> dict[str, Any]:
    """Generate a dataset and write it below --out."""

    dataset = generate(section, global_config[CONF_SEED])
    path = resolve_path(global_config, section[CONF_NAME] or section[CONF_EQUATION])
    save_dataset(dataset, path)

    summary = {**dataset_summary(dataset), "path": str(path)}
    _LOGGER.info("gen: %s", summary)
    return summary
