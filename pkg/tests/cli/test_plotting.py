"""Tests for SVG rendering of result tables."""

import pandas as pd
import pytest

from neuralhss.cli.plotting import plot_series, read_table
from neuralhss.const import EXIT_OK
from neuralhss.exceptions.artifact_exception import ArtifactExceptionError

from tests.helpers.cli_runner import run_command


@pytest.fixture
def sweep_frame():
    """Two series over three train sizes."""
    return pd.DataFrame(
        {
            "model": ["hss", "dense"] * 3,
            "train_size": [10, 10, 100, 100, 1000, 1000],
            "rel_l2": [0.3, 0.5, 0.1, 0.2, 0.03, 0.08],
        }
    )


def test_plot_is_deterministic(tmp_path, sweep_frame):
    """The same table renders to the same bytes."""

    args = ("train_size", "rel_l2", "model", True, True)

    first = plot_series(sweep_frame, tmp_path / "a.svg", *args)
    second = plot_series(sweep_frame, tmp_path / "b.svg", *args)

    assert first.read_bytes() == second.read_bytes()


def test_plot_tags_every_series(tmp_path, sweep_frame):
    """Each line carries the group id series_<name>."""

    output = plot_series(sweep_frame, tmp_path / "sweep.svg", "train_size", "rel_l2", "model")

    svg = output.read_text(encoding="utf-8")
    assert 'id="series_hss"' in svg
    assert 'id="series_dense"' in svg


def test_plot_without_series_column(tmp_path, sweep_frame):
    """No series column draws a single line named after y."""

    output = plot_series(sweep_frame, tmp_path / "one.svg", "train_size", "rel_l2")
    assert 'id="series_rel_l2"' in output.read_text(encoding="utf-8")


def test_plot_rejects_empty_and_unknown(tmp_path, sweep_frame):
    """Empty tables and unknown columns are artifact errors naming the column."""

    with pytest.raises(ArtifactExceptionError) as exc:
        plot_series(sweep_frame.iloc[0:0], tmp_path / "x.svg", "train_size", "rel_l2", "model")
    assert exc.value.field == "rel_l2"

    with pytest.raises(ArtifactExceptionError) as exc:
        plot_series(sweep_frame, tmp_path / "x.svg", "train_size", "seconds", "model")
    assert exc.value.field == "seconds"


def test_read_table_errors(tmp_path):
    """Missing and empty files both point at the input."""

    with pytest.raises(ArtifactExceptionError) as exc:
        read_table(tmp_path / "absent.csv")
    assert exc.value.field == "input"

    empty = tmp_path / "empty.csv"
    empty.write_text("", encoding="utf-8")
    with pytest.raises(ArtifactExceptionError) as exc:
        read_table(empty)
    assert exc.value.field == "input"


def test_plot_command(tmp_path, capsys, sweep_frame):
    """plot renders a CSV below --out next to its source by default."""

    sweep_frame.to_csv(tmp_path / "sweep.csv", index=False)

    code, summary = run_command(capsys, tmp_path, "plot", {"plot": {"title": "sweep"}})

    assert code == EXIT_OK
    assert summary["path"] == str(tmp_path / "sweep.svg")
    assert (tmp_path / "sweep.svg").is_file()


def test_plot_command_missing_table(tmp_path, capsys):
    """A missing table is a compute failure."""

    code, _ = run_command(capsys, tmp_path, "plot", {"plot": {"input": "none.csv"}})
    assert code == 1
