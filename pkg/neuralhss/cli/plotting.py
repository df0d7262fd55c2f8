# ruff: noqa: TID252
"""Deterministic SVG line charts from CSV tables."""

import logging
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import pandas as pd  # noqa: E402

from ..const import SVG_HASH_SALT  # noqa: E402
from ..exceptions.artifact_exception import ArtifactExceptionError  # noqa: E402

# ----------------------------------------------------------------------------
# ----------------------------------------------------------------------------
_LOGGER = logging.getLogger(__name__)

SERIES_GID_PREFIX = "series_"
FIGURE_SIZE = (6.0, 4.0)


# ----------------------------------------------------------------------------
def read_table(path: str | Path) -> pd.DataFrame:
    """Read a CSV table, mapping parser failures to ArtifactExceptionError."""

    path = Path(path)
    if not path.is_file():
        msg = f"Missing table {path}"
        raise ArtifactExceptionError(msg, "input")

    try:
        return pd.read_csv(path)
    except (pd.errors.EmptyDataError, pd.errors.ParserError, UnicodeDecodeError) as ex:
        msg = f"Malformed CSV {path}: {ex}"
        raise ArtifactExceptionError(msg, "input") from ex


# ----------------------------------------------------------------------------
def _series(
    frame: pd.DataFrame, x: str, y: str, series: str | None
) -> list[tuple[str, pd.DataFrame]]:
    for column in (x, y, series):
        if column is not None and column not in frame.columns:
            msg = f"Column {column!r} not in table columns {list(frame.columns)}"
            raise ArtifactExceptionError(msg, column)

    if frame.empty:
        msg = "Cannot plot an empty table"
        raise ArtifactExceptionError(msg, y)

    if series is None:
        groups = [(y, frame)]
    else:
        groups = [(str(name), group) for name, group in frame.groupby(series, sort=True)]

    result = []
    for name, group in groups:
        points = group[[x, y]].apply(pd.to_numeric, errors="coerce").dropna()
        if points.empty:
            msg = f"Series {name!r} has no numeric points"
            raise ArtifactExceptionError(msg, name)
        result.append((name, points.sort_values(x, kind="stable")))
    return result


# ----------------------------------------------------------------------------
def plot_series(
    frame: pd.DataFrame,
    output: str | Path,
    x: str,
    y: str,
    series: str | None = None,
    log_x: bool = False,
    log_y: bool = False,
    title: str | None = None,
) -> Path:
    """Render one line per series; each line's SVG group id is series_<name>.

    The same frame always produces the same bytes.
    """

    groups = _series(frame, x, y, series)
    output = Path(output)
    output.parent.mkdir(parents=True, exist_ok=True)

    with plt.rc_context({"svg.hashsalt": SVG_HASH_SALT, "svg.fonttype": "path"}):
        fig, ax = plt.subplots(figsize=FIGURE_SIZE)
        try:
            for name, points in groups:
                (line,) = ax.plot(points[x], points[y], marker="o", label=name)
                line.set_gid(f"{SERIES_GID_PREFIX}{name}")
            if log_x:
                ax.set_xscale("log")
            if log_y:
                ax.set_yscale("log")
            ax.set_xlabel(x)
            ax.set_ylabel(y)
            if title:
                ax.set_title(title)
            if len(groups) > 1:
                ax.legend()
            ax.grid(True, which="both", alpha=0.3)
            fig.savefig(output, format="svg", metadata={"Date": None})
        finally:
            plt.close(fig)

    _LOGGER.info("plot_series: %s series -> %s", len(groups), output)
    return output
