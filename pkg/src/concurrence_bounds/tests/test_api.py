"""Tests for state files, sweeps and crossover search"""

import io
import json
import math

import numpy as np
import pytest

from concurrence_bounds import api
from concurrence_bounds.exceptions import (
    InputError,
    NoCrossingError,
    NotFiniteError,
    NotHermitianError,
    ParamOutOfRangeError,
    StateFileError,
)
from concurrence_bounds.states import example1_state, random_mixed


def test_load_reference_state_files(test_data_dir):
    bell = api.load_state_file(test_data_dir / "bell_phi_plus.json")
    assert (bell.d1, bell.d2) == (2, 2)
    assert bell.mat[0, 3] == pytest.approx(0.5)
    mixed = api.load_state_file(test_data_dir / "maximally_mixed_2x2.json")
    np.testing.assert_allclose(mixed.mat, np.eye(4) / 4)


def test_load_state_file_reports_invariant(test_data_dir):
    with pytest.raises(NotHermitianError, match="Hermitian invariant violated"):
        api.load_state_file(test_data_dir / "not_hermitian_2x2.json")


def test_state_file_round_trip(tmp_path):
    rho = random_mixed(2, 3, 3, seed=12)
    path = tmp_path / "state.json"
    api.dump_state_file(rho, path)
    loaded = api.load_state_file(path)
    assert (loaded.d1, loaded.d2) == (2, 3)
    np.testing.assert_array_equal(loaded.mat, rho.mat)


@pytest.mark.parametrize(
    "content, message",  # noqa: PT006
    [
        ("{not json", "not valid JSON"),
        (json.dumps({"d1": 2, "matrix": []}), "must hold d1, d2 and matrix"),
        (json.dumps({"d1": 2, "d2": 2, "matrix": [[1, 0]]}), "expected \\(16, 2\\)"),
    ],
)
def test_load_state_file_errors(tmp_path, content, message):
    path = tmp_path / "bad.json"
    path.write_text(content)
    with pytest.raises(StateFileError, match=message):
        api.load_state_file(path)


def test_load_state_file_rejects_undecodable_bytes(tmp_path):
    path = tmp_path / "binary.json"
    path.write_bytes(b'{"d1": 2, "d2": 2, "matrix": "\xff\xfe"}')
    with pytest.raises(StateFileError, match="not UTF-8"):
        api.load_state_file(path)


@pytest.mark.parametrize("d1", [2.7, 2.0, "2", True])
def test_load_state_file_rejects_non_integer_dimensions(tmp_path, d1):
    path = tmp_path / "fractional.json"
    matrix = [[0.25 if i % 5 == 0 else 0.0, 0.0] for i in range(16)]
    path.write_text(json.dumps({"d1": d1, "d2": 2, "matrix": matrix}))
    with pytest.raises(StateFileError, match="non-integer d1"):
        api.load_state_file(path)


def test_load_state_file_rejects_non_finite_entries(tmp_path):
    path = tmp_path / "nan.json"
    matrix = [[0.25 if i % 5 == 0 else 0.0, 0.0] for i in range(16)]
    matrix[1] = [float("nan"), 0.0]
    path.write_text(json.dumps({"d1": 2, "d2": 2, "matrix": matrix}))
    with pytest.raises(NotFiniteError, match="finite entries invariant violated"):
        api.load_state_file(path)


def test_load_missing_state_file(tmp_path):
    with pytest.raises(StateFileError, match="Unable to read"):
        api.load_state_file(tmp_path / "missing.json")


def test_state_from_options(test_data_dir):
    rho = api.state_from_options({"family": "example1", "x": 0.5, "q1": None})
    assert (rho.d1, rho.d2) == (4, 4)
    loaded = api.state_from_options(
        {"state": str(test_data_dir / "bell_phi_plus.json"), "family": None}
    )
    assert loaded.d1 == 2
    with pytest.raises(InputError, match="--state or --family"):
        api.state_from_options({"family": None, "state": None})


def test_render_report_lists_every_field():
    text = api.render_report(api.full_report(example1_state(1.0)))
    assert text.startswith("state: 4x4")
    for name in ("t_frobenius", "t_trace_norm", "k_const", "best_c", "purity_a"):
        assert f"\n{name}: " in text
    assert "clamped_thm2_c: " in text
    assert "wootters_c: n/a" in text
    assert "detected_by_ppt: yes" in text


@pytest.mark.parametrize(
    "start, stop, step, expected",  # noqa: PT006
    [
        (0.3, 0.3, 0.1, [0.3]),
        (0.0, 1.0, 0.3, [0.0, 0.3, 0.6, 0.9, 1.0]),
        (0.0, 1.0, 0.25, [0.0, 0.25, 0.5, 0.75, 1.0]),
    ],
)
def test_parameter_grid(start, stop, step, expected):
    np.testing.assert_allclose(api.parameter_grid(start, stop, step), expected)


def test_parameter_grid_figure_range():
    grid = api.parameter_grid(0.5, 1.0, 0.005)
    assert len(grid) == 101
    assert grid[0] == 0.5
    assert grid[-1] == 1.0
    assert np.all(np.diff(grid) > 0)


@pytest.mark.parametrize(
    "start, stop, step",  # noqa: PT006
    [(0.5, 0.4, 0.1), (0.0, 1.0, 0.0), (0.0, 1.0, -0.1)],
)
def test_parameter_grid_rejects_bad_ranges(start, stop, step):
    with pytest.raises(ParamOutOfRangeError):
        api.parameter_grid(start, stop, step)


def test_sweep_rows_are_ordered():
    rows = api.sweep("example1", 0.5, 1.0, 0.05, max_workers=4)
    assert [row.param for row in rows] == pytest.approx(
        list(np.linspace(0.5, 1.0, 11))
    )
    assert all(row.pra_c is None for row in rows)
    assert rows[-1].thm2_c2 == pytest.approx(0.5)
    assert rows == api.sweep("example1", 0.5, 1.0, 0.05, max_workers=1)


def test_sweep_example2_adds_closed_form_columns():
    rows = api.sweep("example2", 0.0, 1.0, 0.25)
    assert len(rows) == 5
    assert rows[-1].pra_c == pytest.approx(1 / (2 * math.sqrt(6)))
    assert rows[-1].old_c == pytest.approx(1 / (2 * math.sqrt(6)))
    assert api.sweep_columns("example2")[-2:] == ("pra_c", "old_c")


def test_sweep_single_point():
    rows = api.sweep("isotropic", 0.7, 0.7, 0.005, d1=3)
    assert len(rows) == 1
    assert rows[0].param == 0.7


@pytest.mark.parametrize(
    "family, start, stop",  # noqa: PT006
    [("example1", -0.1, 1.0), ("example2", 0.0, 1.2), ("haar", 0.0, 1.0)],
)
def test_sweep_rejects_invalid_input(family, start, stop):
    with pytest.raises(ParamOutOfRangeError):
        api.sweep(family, start, stop, 0.1)


def test_sweep_csv_format():
    stream = io.StringIO()
    rows = api.sweep("example2", 0.5, 1.0, 0.25)
    api.write_sweep_csv(rows, "example2", stream)
    text = stream.getvalue()
    assert "\r" not in text
    lines = text.splitlines()
    assert lines[0] == (
        "param,t_frobenius,thm2_c,caf_c,thm2_c2,qc_c2,best_c,best_c2,pra_c,old_c"
    )
    assert len(lines) == 4
    first = [float(value) for value in lines[1].split(",")]
    assert first[1] == rows[0].t_frobenius
    assert first[2] == rows[0].thm2_c


def test_sweep_csv_is_reproducible():
    outputs = []
    for _ in range(2):
        stream = io.StringIO()
        api.write_sweep_csv(api.sweep("example1", 0.0, 1.0, 0.1), "example1", stream)
        outputs.append(stream.getvalue())
    assert outputs[0] == outputs[1]
    assert "pra_c" not in outputs[0]


def test_bound_values():
    values = api.bound_values("example2", 0.9)
    assert set(values) >= {"thm2_c", "caf_c", "thm2_c2", "qc_c2", "pra_c", "old_c"}
    assert values["t_frobenius"] ** 2 == pytest.approx(11.98 / 9)


def test_crossover_correlation_versus_witness():
    assert api.find_crossover("example1") == pytest.approx(0.914, abs=0.005)


def test_crossover_two_concurrence():
    crossing = api.find_crossover("example1", bound="thm2_c2", against=["qc_c2"])
    assert crossing == pytest.approx(0.854, abs=0.005)


def test_crossover_example2():
    assert api.find_crossover("example2") == pytest.approx(0.82, abs=0.01)


def test_crossover_is_a_sign_change():
    crossing = api.find_crossover("example1", tolerance=1e-8)
    below = api.bound_values("example1", crossing - 1e-6)
    above = api.bound_values("example1", crossing + 1e-6)
    assert below["thm2_c"] < below["caf_c"]
    assert above["thm2_c"] > above["caf_c"]


def test_no_crossover():
    with pytest.raises(NoCrossingError):
        api.find_crossover("example1", start=0.0, stop=0.5)


@pytest.mark.parametrize(
    "family, bound, against",  # noqa: PT006
    [
        ("example1", "pra_c", ["caf_c"]),
        ("example1", "thm2_c", ["nonsense"]),
        ("example2", "best_c", ["caf_c"]),
    ],
)
def test_crossover_rejects_unknown_bounds(family, bound, against):
    with pytest.raises(ParamOutOfRangeError):
        api.find_crossover(family, bound=bound, against=against)


def test_crossover_warns_on_multiple_sign_changes(mocker, caplog):
    mocker.patch(
        "concurrence_bounds.api.bound_values",
        side_effect=lambda family, param, d1: {  # noqa: ARG005
            "thm2_c": math.cos(20 * param),
            "caf_c": 0.0,
        },
    )
    crossing = api.find_crossover("example1")
    assert crossing == pytest.approx(math.pi / 40, abs=1e-5)
    assert "changes sign" in caplog.text
