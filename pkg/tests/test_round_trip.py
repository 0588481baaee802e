"""Fixture round-trip tests for the distribution and channel file formats.

These tests pin down that the JSON fixtures committed under ``tests/fixtures``
parse into validated models and re-serialize without drift: labels compare
exactly, probabilities within float tolerance.
"""

import json
from pathlib import Path

import numpy as np
import pytest
from pydantic import ValidationError

from corrlab.dist import (
    Channel,
    JointDist3,
    dump_channel,
    dump_dist,
    load_channel,
    load_dist,
    parse_dist,
    write_dist,
)
from corrlab.errors import NegativeMass, NotNormalized, ShapeMismatch

FIXTURES = Path(__file__).parent / "fixtures"


def _roundtrip(fixture_name: str) -> None:
    raw = json.loads((FIXTURES / fixture_name).read_text())
    parsed = load_dist(FIXTURES / fixture_name)
    again = json.loads(dump_dist(parsed))
    for key in ("labels_x", "labels_y", "labels_u"):
        if key in raw:
            assert again[key] == raw[key], f"{fixture_name}: {key} diverged"
    assert np.allclose(again["pmf"], raw["pmf"], atol=1e-15), fixture_name


def test_dsbs_fixture_roundtrips() -> None:
    _roundtrip("dsbs_01.json")


def test_independent_fixture_roundtrips() -> None:
    _roundtrip("independent.json")


def test_three_variable_fixture_roundtrips() -> None:
    _roundtrip("dsbs_mixture.json")


def test_three_variable_layout_is_one_matrix_per_u() -> None:
    d = load_dist(FIXTURES / "dsbs_mixture.json")
    assert isinstance(d, JointDist3)
    assert d.shape == (2, 2, 2)
    assert d.array[0, 1, 1] == pytest.approx(0.1)
    assert d.array[0, 0, 0] == pytest.approx(0.225)


def test_channel_fixture_roundtrips() -> None:
    ch = load_channel(FIXTURES / "channel_w_equals_x.json")
    assert (ch.input_size_x, ch.input_size_y, ch.output_size_w) == (2, 2, 2)
    raw = json.loads((FIXTURES / "channel_w_equals_x.json").read_text())
    assert json.loads(dump_channel(ch)) == raw


def test_write_dist_then_load(tmp_path: Path) -> None:
    d = load_dist(FIXTURES / "dsbs_03.json")
    path = tmp_path / "copy.json"
    write_dist(d, path)
    back = load_dist(path)
    assert back.alphabet_x == d.alphabet_x
    assert np.allclose(back.array, d.array, atol=1e-15)


# ── Strict validation tests ──
#
# Malformed documents surface as ValidationError, invariant violations as
# the named distribution errors.


def test_unknown_field_is_rejected() -> None:
    with pytest.raises(ValidationError):
        load_dist(FIXTURES / "unknown_field.json")


def test_truncated_document_is_rejected() -> None:
    with pytest.raises(ValidationError):
        load_dist(FIXTURES / "truncated.json")


def test_negative_mass_fixture() -> None:
    with pytest.raises(NegativeMass):
        load_dist(FIXTURES / "negative_mass.json")


def test_not_normalized_fixture() -> None:
    with pytest.raises(NotNormalized):
        load_dist(FIXTURES / "not_normalized.json")


def test_label_count_mismatch() -> None:
    with pytest.raises(ShapeMismatch):
        parse_dist('{"labels_x": [0, 1, 2], "pmf": [[0.5, 0.0], [0.0, 0.5]]}')


def test_channel_rows_must_be_stochastic() -> None:
    with pytest.raises(NotNormalized):
        Channel.from_array([[[0.7, 0.7]]])


def test_ragged_pmf() -> None:
    """Rows of unequal length are a shape error, not a numpy error."""
    with pytest.raises(ShapeMismatch):
        load_dist(FIXTURES / "ragged.json")
    with pytest.raises(ShapeMismatch):
        parse_dist('{"pmf": [[[0.25, 0.25], [0.5]]]}')


def test_ragged_kernel() -> None:
    with pytest.raises(ShapeMismatch):
        Channel.from_array([[[1.0, 0.0], [1.0]]])
