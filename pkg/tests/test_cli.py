from __future__ import annotations

import json
import subprocess
import sys

import pytest

from greenring.cli import COMMANDS, main


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_mul(capsys):
    assert run(capsys, "mul", "--radford", "2,2", "M(2,0)", "P[1]") == (0, "2*P[1]\n", "")


def test_mul_normalizes_p_labels(capsys):
    status, out, _ = run(capsys, "mul", "--radford", "2,2", "P[3]", "M(1,0)")
    assert (status, out) == (0, "P[1]\n")


def test_cartan(capsys):
    status, out, _ = run(capsys, "cartan", "--radford", "2,2", "--json")
    assert status == 0
    assert json.loads(out)["entries"] == [[1, 1, 0], [1, 1, 0], [0, 0, 1]]


def test_oracle_verify(capsys):
    status, out, _ = run(capsys, "oracle-verify", "--radford", "2,3")
    assert (status, out) == (0, "0 mismatches / 100 pairs\n")


@pytest.mark.parametrize("command", sorted(set(COMMANDS) - {"mul"}))
def test_every_command_succeeds_and_is_deterministic(capsys, command):
    first = run(capsys, command, "--radford", "2,2", "--json")
    second = run(capsys, command, "--radford", "2,2", "--json")
    assert first[0] == 0, first
    assert first == second
    json.loads(first[1])


def test_datum_file(capsys, tmp_path):
    path = tmp_path / "d.json"
    path.write_text(json.dumps({"cyclic_orders": [2, 4], "chi": [1, 2], "g": [0, 1]}))
    status, out, _ = run(capsys, "validate", "--datum", str(path))
    assert status == 0 and "n = 2, r = 2" in out
    status, _, err = run(capsys, "radford-presentation", "--datum", str(path))
    assert status == 2 and "Radford" in err


def test_radford_file_supports_presentation(capsys, tmp_path):
    path = tmp_path / "r.json"
    path.write_text(json.dumps({"radford": {"m": 3, "n": 2}}))
    status, out, _ = run(capsys, "g0-presentation", "--datum", str(path))
    assert status == 0 and "X1^3 - 4*Y - 4" in out


@pytest.mark.parametrize("argv", [
    ["mul", "--radford", "2,2", "M(3,0)", "P[1]"],
    ["validate", "--radford", "1,3"],
    ["validate", "--datum", "/nonexistent/datum.json"],
])
def test_input_errors(capsys, argv):
    status, out, err = run(capsys, *argv)
    assert status == 2 and out == "" and err.startswith("error:")


@pytest.mark.parametrize("argv", [
    ["validate"],
    ["validate", "--radford", "2"],
    ["frobnicate", "--radford", "2,2"],
])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_mismatch_exit_status(capsys):
    # a tolerance of -1 can never be met, so the FPdim check must report failure
    status, _, _ = run(capsys, "fpdim", "--radford", "2,2", "--tolerance", "-1")
    assert status == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "greenring", "mul", "--radford", "3,2", "P[1]", "P[1]"],
                          capture_output=True, text=True)
    assert (proc.returncode, proc.stdout) == (0, "2*P[2]\n")
