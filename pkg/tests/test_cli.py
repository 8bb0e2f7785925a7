"""
Command Line Tests

Drives the click commands in-process with CliRunner. JSON goes to stdout;
warnings, logs and diagnostics go to stderr.
"""

import json
import pytest
import numpy as np
from math import log, pi
from pathlib import Path
import sys

from click.testing import CliRunner

sys.path.insert(0, str(Path(__file__).parent.parent))

from cli import EXIT_INVALID_STATE, EXIT_IO_FAILURE, cli
from core.config import reload_config
from core.logging_config import setup_logging


R_POINT = (0.768, 0.116, 0.116)


@pytest.fixture(autouse=True)
def fresh_config():
    reload_config()
    yield
    reload_config()
    # CliRunner swaps stderr per invocation; log to the real stream again.
    setup_logging()


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)


def write_json(path: Path, document) -> str:
    path.write_text(json.dumps(document))
    return str(path)


def run_json(runner, args, **kwargs):
    result = runner.invoke(cli, args, **kwargs)
    assert result.exit_code == 0, result.stderr
    return json.loads(result.stdout)


def test_basis_qubit(runner):
    payload = run_json(runner, ["basis", "--n", "2", "--structure"])

    assert payload["count"] == 3
    assert payload["matrices"][0] == [[0.0, 0.0], [1.0, 0.0], [1.0, 0.0], [0.0, 0.0]]
    assert payload["matrices"][2] == [[1.0, 0.0], [0.0, 0.0], [0.0, 0.0], [-1.0, 0.0]]
    assert payload["f"] == [[0, 1, 2, 1.0]]
    assert payload["d"] == []


def test_basis_four_levels(runner):
    payload = run_json(runner, ["basis", "--n", "4"])

    assert payload["count"] == 15
    last = np.array(payload["matrices"][-1])[:, 0]
    np.testing.assert_allclose(last[[0, 5, 10, 15]], np.array([1, 1, 1, -3]) / np.sqrt(6), atol=1e-12)


def test_basis_rejects_one_level(runner):
    result = runner.invoke(cli, ["basis", "--n", "1"])
    assert result.exit_code == 2


def test_classify_matrix_file(runner, tmp_path):
    path = write_json(tmp_path / "mixed.json", {
        "n": 3,
        "entries": [[1 / 3, 0], [0, 0], [0, 0], [0, 0], [1 / 3, 0], [0, 0], [0, 0], [0, 0], [1 / 3, 0]],
    })
    payload = run_json(runner, ["classify", path])

    assert payload["stratum"]["partition"] == [3]
    assert payload["entropy"] == pytest.approx(log(3), abs=1e-11)
    assert payload["casimirs"] == pytest.approx([1.0, 1 / 3, 1 / 27], abs=1e-11)


def test_classify_spectrum_file(runner, tmp_path):
    payload = run_json(runner, ["classify", write_json(tmp_path / "pure.json", [1, 0, 0, 0])])

    assert payload["stratum"]["kind"] == "pure"
    assert payload["stratum"]["orbit_dim"] == 6
    assert payload["is_pure"] is True


def test_classify_from_stdin(runner):
    payload = run_json(runner, ["classify", "-"], input=json.dumps({"spectrum": [0.5, 0.5]}))
    assert payload["stratum"]["kind"] == "fixed-point"


def test_classify_rejects_negative_matrix(runner, tmp_path):
    path = write_json(tmp_path / "bad.json", [[1.2, 0.0], [0.0, -0.2]])
    result = runner.invoke(cli, ["classify", path])

    assert result.exit_code == EXIT_INVALID_STATE
    assert "min eigenvalue" in result.stderr
    assert result.stdout == ""


def test_classify_rejects_bad_spectrum(runner, tmp_path):
    result = runner.invoke(cli, ["classify", write_json(tmp_path / "bad.json", [0.7, 0.7])])
    assert result.exit_code == EXIT_INVALID_STATE


def test_unreadable_inputs(runner, tmp_path):
    missing = runner.invoke(cli, ["classify", str(tmp_path / "missing.json")])
    assert missing.exit_code == EXIT_IO_FAILURE

    garbage = tmp_path / "garbage.json"
    garbage.write_text("{not json")
    assert runner.invoke(cli, ["classify", str(garbage)]).exit_code == EXIT_IO_FAILURE

    shapeless = write_json(tmp_path / "shapeless.json", {"rows": []})
    assert runner.invoke(cli, ["classify", shapeless]).exit_code == EXIT_IO_FAILURE


@pytest.mark.parametrize("document", [
    {"n": "x", "entries": [[0.5, 0.0], [0.0, 0.0], [0.0, 0.0], [0.5, 0.0]]},
    {"n": 1, "entries": [[1.0, 0.0]]},
    {"n": 2.5, "spectrum": [0.5, 0.5]},
])
def test_bad_declared_levels(runner, tmp_path, document):
    result = runner.invoke(cli, ["classify", write_json(tmp_path / "state.json", document)])
    assert result.exit_code == EXIT_IO_FAILURE


def test_decode_rejects_bad_declared_levels(runner, tmp_path):
    path = write_json(tmp_path / "vector.json", {"n": 1, "components": []})
    assert runner.invoke(cli, ["decode", path]).exit_code == EXIT_IO_FAILURE


def test_non_utf8_input(runner, tmp_path):
    path = tmp_path / "binary.json"
    path.write_bytes(b"\xff\xfe\x00[0.5, 0.5]")
    result = runner.invoke(cli, ["classify", str(path)])

    assert result.exit_code == EXIT_IO_FAILURE
    assert "UTF-8" in result.stderr


def test_non_finite_matrix_is_an_invalid_state(runner, tmp_path):
    path = tmp_path / "nan.json"
    path.write_text("[[NaN, 0.0], [0.0, 1.0]]")
    result = runner.invoke(cli, ["classify", str(path)])

    assert result.exit_code == EXIT_INVALID_STATE
    assert "finite" in result.stderr


def test_missing_config_file(runner, tmp_path):
    result = runner.invoke(cli, ["--config", str(tmp_path / "absent.yaml"), "basis", "--n", "2"])
    assert result.exit_code == EXIT_IO_FAILURE


def test_encode_and_decode(runner, tmp_path):
    encoded = run_json(runner, ["encode", write_json(tmp_path / "state.json", [0.75, 0.25])])
    assert encoded["norm"] == pytest.approx(0.5, abs=1e-12)

    decoded = run_json(runner, ["decode", write_json(tmp_path / "vector.json", encoded)])
    assert decoded["valid"] is True
    assert decoded["entries"][0] == pytest.approx([0.75, 0.0], abs=1e-12)


def test_decode_outside_state_body(runner, tmp_path):
    path = write_json(tmp_path / "vector.json", {"n": 2, "components": [0.0, 0.0, 2.0]})
    result = runner.invoke(cli, ["decode", path])

    assert result.exit_code == EXIT_INVALID_STATE
    payload = json.loads(result.stdout)
    assert payload["valid"] is False
    assert payload["min_eigenvalue"] < 0


def test_casimirs_payload(runner, tmp_path):
    path = write_json(tmp_path / "state.json", [[0.5, 0.0], [0.0, 0.5]])
    payload = run_json(runner, ["casimirs", path])

    assert payload["I"] == pytest.approx([1.0, 0.25], abs=1e-12)
    assert payload["I_from_traces"] == pytest.approx([1.0, 0.25], abs=1e-12)
    assert payload["cayley_hamilton_residual"] == pytest.approx(0.0, abs=1e-12)


def test_entropy_from_angles(runner):
    payload = run_json(runner, ["entropy", "--n", "2", "--theta", str(pi / 2)])

    assert payload["entropy"] == pytest.approx(log(2), abs=1e-11)
    assert payload["entropy_from_angles"] == pytest.approx(log(2), abs=1e-11)
    assert payload["unit"] == "nats"


def test_entropy_in_bits(runner, tmp_path):
    path = write_json(tmp_path / "state.json", [0.5, 0.5])
    payload = run_json(runner, ["--log-base", "bits", "entropy", path])

    assert payload["entropy"] == pytest.approx(1.0, abs=1e-11)
    assert payload["unit"] == "bits"


def test_entropy_needs_input(runner):
    assert runner.invoke(cli, ["entropy"]).exit_code == 2


def test_contour_through_r_point(runner):
    result = runner.invoke(cli, ["contour", "--level", "0.6931", "--res", "200"])
    assert result.exit_code == 0, result.stderr

    payload = json.loads(result.stdout)
    points = np.array([point for line in payload["polylines"] for point in line])
    assert np.min(np.max(np.abs(points - np.array(R_POINT)), axis=1)) < 1e-2
    assert payload["max_deviation"] < 1e-3
    assert "points:" in result.stderr


def test_contour_out_of_range_is_not_an_error(runner):
    result = runner.invoke(cli, ["contour", "--level", "1.2", "--res", "20"])

    assert result.exit_code == 0
    assert "warning" in result.stderr
    payload = json.loads(result.stdout)
    assert payload["point_count"] == 0
    assert payload["polylines"] == []


def test_contour_tolerance_warning(runner):
    result = runner.invoke(cli, ["contour", "--level", "0.05", "--res", "20", "--no-refine"])

    assert result.exit_code == 0
    assert "exceeds the contour tolerance" in result.stderr
    payload = json.loads(result.stdout)
    assert payload["within_tolerance"] is False
    assert payload["max_deviation"] > 1e-3


def test_contour_rejects_nan_level(runner):
    assert runner.invoke(cli, ["contour", "--level", "nan"]).exit_code == 2


def test_contour_level_in_bits(runner):
    payload = run_json(runner, ["--log-base", "bits", "contour", "--level", "1.0", "--res", "40"])
    assert payload["level"] == pytest.approx(log(2), abs=1e-11)


def test_contour_resolution_improves_linear_vertices(runner):
    coarse = run_json(runner, ["contour", "--level", "0.5", "--res", "50", "--no-refine"])
    fine = run_json(runner, ["contour", "--level", "0.5", "--res", "400", "--no-refine"])
    assert fine["max_deviation"] < coarse["max_deviation"]


def test_surface_as_csv(runner):
    result = runner.invoke(cli, ["--format", "csv", "surface", "--res", "4"])
    lines = result.stdout.splitlines()

    assert result.exit_code == 0
    assert lines[0] == "x,y,z,eta"
    assert len(lines) == 1 + 15


def test_profile(runner):
    payload = run_json(runner, ["profile", "--start", "0.5,0.5", "--end", "1,0", "--samples", "3"])

    assert [row[0] for row in payload["profile"]] == [0.0, 0.5, 1.0]
    assert payload["profile"][0][1] == pytest.approx(log(2), abs=1e-11)
    assert payload["profile"][-1][1] == 0.0


def test_profile_rejects_mismatched_endpoints(runner):
    result = runner.invoke(cli, ["profile", "--start", "0.5,0.5", "--end", "1,0,0"])
    assert result.exit_code == 2


def test_tables(runner):
    payload = run_json(runner, ["tables", "--n", "4"])
    distances = {row["pair"]: row["distance"] for row in payload["distances"]}

    assert distances["O-P"] == pytest.approx(1.0, abs=1e-9)
    assert distances["O-Q_F"] == pytest.approx(1 / 3, abs=1e-9)
    assert runner.invoke(cli, ["tables", "--n", "9"]).exit_code == 2


def test_sample_is_reproducible(runner):
    first = run_json(runner, ["--seed", "7", "sample", "--n", "3", "--count", "2"])
    second = run_json(runner, ["--seed", "7", "sample", "--n", "3", "--count", "2"])
    other = run_json(runner, ["--seed", "8", "sample", "--n", "3", "--count", "2"])

    assert first == second
    assert first != other
    assert len(first["samples"]) == 2


def test_output_file(runner, tmp_path):
    target = tmp_path / "basis.json"
    result = runner.invoke(cli, ["--out", str(target), "basis", "--n", "2"])

    assert result.exit_code == 0
    assert result.stdout == ""
    assert json.loads(target.read_text())["count"] == 3


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
