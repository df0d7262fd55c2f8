"""Tests for configuration loading, validation and dumping."""

import json

import pytest

from neuralhss.config.config_utils import (
    config_fingerprint,
    dump_config,
    load_config,
    resolve_config,
)
from neuralhss.exceptions.validation_exception import ValidationExceptionError


@pytest.fixture
def config_file(tmp_path):
    """Write a JSON document and return its path."""

    def _write(document) -> str:
        path = tmp_path / "config.json"
        path.write_text(json.dumps(document), encoding="utf-8")
        return str(path)

    return _write


def test_defaults_without_file():
    """No file gives fully defaulted globals and sections."""

    # Call the method
    global_config, section = resolve_config(load_config(None), "train")

    # Verify results
    assert global_config == {"seed": 0, "out": "out", "threads": 1}
    assert section["model"]["structure"] == "hss"
    assert section["model"]["depth"] == 3
    assert section["optimizer"]["batch_size"] == 256
    assert section["optimizer"]["betas"] == [0.9, 0.99]
    assert section["train_samples"] is None


def test_overrides_win_over_document(config_file):
    """Command line flags replace document globals; None leaves them."""

    raw = load_config(config_file({"seed": 4, "out": "runs"}))

    global_config, _ = resolve_config(raw, "gen", {"seed": 9, "out": None, "threads": None})

    assert global_config == {"seed": 9, "out": "runs", "threads": 1}


def test_section_values_are_coerced(config_file):
    """Numeric strings are accepted where numbers are expected."""

    raw = load_config(config_file({"train": {"optimizer": {"peak_lr": "0.01", "epochs": 3}}}))

    _, section = resolve_config(raw, "train")

    assert section["optimizer"]["peak_lr"] == 0.01
    assert section["optimizer"]["epochs"] == 3


def test_recovery_optimizer_defaults():
    """exact-recovery trains full batch without decay or clipping."""

    _, section = resolve_config({}, "exact-recovery")

    assert section["optimizer"]["batch_size"] is None
    assert section["optimizer"]["weight_decay"] == 0.0
    assert section["optimizer"]["grad_clip_norm"] == 0.0
    assert section["optimizer"]["alpha_penalty"] == 1.0
    assert section["samples"] is None


@pytest.mark.parametrize(
    ("document", "base", "key"),
    [
        ({"train": {"model": {"rank": 0}}}, "train", "model.rank"),
        ({"train": {"model": {"structure": "mlp"}}}, "train", "model.structure"),
        ({"train": {"optimizer": {"min_lr": 0}}}, "train", "optimizer.min_lr"),
        ({"exact-recovery": {"optimizer": {"peak_lr": 0.0}}}, "exact-recovery", "optimizer.peak_lr"),
        ({"train": {"unknown": 1}}, "train", "unknown"),
        ({"data-efficiency": {"sweep": [10, 5]}}, "data-efficiency", "sweep"),
        ({"bench-matvec": {"extents": [256]}}, "bench-matvec", "extents"),
        ({"seed": -1}, "config", "seed"),
    ],
)
def test_invalid_values_name_their_key(document, base, key, config_file):
    """Validation failures carry the section and the dotted key."""

    command = next((k for k in document if k != "seed"), "train")
    raw = load_config(config_file(document))

    with pytest.raises(ValidationExceptionError) as excinfo:
        resolve_config(raw, command)

    assert excinfo.value.base == base
    assert excinfo.value.key == key


def test_unknown_top_level_key(config_file):
    """Only globals and command names may appear at the top level."""

    with pytest.raises(ValidationExceptionError) as excinfo:
        load_config(config_file({"trian": {}}))
    assert excinfo.value.key == "trian"


@pytest.mark.parametrize(("content", "key"), [("{not json", "json"), ("[1, 2]", "document")])
def test_unreadable_documents(content, key, tmp_path):
    """Malformed JSON and non-object documents are rejected."""

    path = tmp_path / "config.json"
    path.write_text(content, encoding="utf-8")

    with pytest.raises(ValidationExceptionError) as excinfo:
        load_config(path)
    assert excinfo.value.key == key


def test_missing_file(tmp_path):
    """A missing file is a configuration error."""

    with pytest.raises(ValidationExceptionError) as excinfo:
        load_config(tmp_path / "absent.json")
    assert excinfo.value.key == "file"


def test_unknown_command():
    """Sections exist only for known commands."""

    with pytest.raises(ValidationExceptionError):
        resolve_config({}, "serve")


def test_dump_config_round_trips():
    """The dump is valid JSON that resolves to itself."""

    dumped = json.loads(dump_config({}, "kernel-rank-decay", {"seed": 2}))

    assert dumped["seed"] == 2
    assert dumped["kernel-rank-decay"]["kernel"] == "log"
    global_config, section = resolve_config(dumped, "kernel-rank-decay")
    assert section == dumped["kernel-rank-decay"]
    assert global_config["seed"] == 2


def test_fingerprint_is_order_independent():
    """Key order does not change the fingerprint."""

    assert config_fingerprint({"a": 1, "b": 2}, {"x": 1}) == config_fingerprint(
        {"b": 2, "a": 1}, {"x": 1}
    )
