"""End-to-end command-line behavior: output text, formats, exit codes."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from jkn.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_check_real(capsys):
    code, out = run(capsys, "check", "3", "8", "2,1,1,1,1,1,1,1")
    assert code == 0
    assert "real positive, degree 3" in out
    assert "reached -beta" in out


def test_check_almost(capsys):
    code, out = run(capsys, "check", "4", "10", "3,3,3,1,1,1,1,1,1,1")
    assert code == 1
    assert "almost real" in out


def test_check_not_in_lattice(capsys):
    code, out = run(capsys, "check", "3", "8", "1,1,1,1,1,1,1,1")
    assert code == 2
    assert "not in root lattice" in out


def test_check_batch_exit_is_worst(capsys):
    code, out = run(
        capsys, "check", "3", "8", "2,1,1,1,1,1,1,1", "1,1,1,1,1,1,1,1"
    )
    assert code == 2
    assert "real positive, degree 3" in out
    assert "not in root lattice" in out


def test_check_batch_from_file(capsys, tmp_path):
    batch = tmp_path / "vectors.txt"
    batch.write_text("2,1,1,1,1,1,1,1\n1,1,1,1,1,1,0,0\n")
    code, out = run(capsys, "check", "3", "8", f"@{batch}")
    assert code == 0
    assert out.count("real") >= 2


def test_check_json(capsys):
    code, out = run(
        capsys, "check", "3", "8", "2,1,1,1,1,1,1,1", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["kind"] == "RealPositive"
    assert data["degree"] == 3
    assert data["trace"]["terminal"] == "real"
    assert len(data["trace"]["steps"]) == 3


def test_usage_errors_exit_3(capsys):
    assert main(["check", "3", "8", "2,1,x"]) == 3
    assert main(["check", "3", "8", "2,1,1"]) == 3
    assert main(["tables", "3", "9", "--max", "0"]) == 3
    assert main(["nonsense"]) == 3
    assert main([]) == 3


def test_contract_errors_exit_3(capsys):
    assert main(["weights", "3", "9"]) == 3  # affine: no weights
    assert main(["manin", "3", "7", "1,1,1,0,0,0,0"]) == 3
    assert main(["families", "gamma", "3", "8"]) == 3  # missing --degree


def test_tables_csv_golden(capsys):
    cases = [
        (("3", "9", "--max", "7", "--kind", "real"), "tables_3_9_real.csv"),
        (("3", "11", "--max", "7", "--kind", "almost"), "tables_3_11_almost.csv"),
        (("5", "10", "--max", "3", "--kind", "real"), "tables_5_10_real.csv"),
    ]
    for args, fixture in cases:
        code, out = run(capsys, "tables", *args, "--format", "csv")
        assert code == 0
        assert out == (GOLDEN / fixture).read_text()


def test_tables_plain_zeros(capsys):
    code, out = run(capsys, "tables", "3", "10", "--max", "7", "--kind", "almost")
    assert code == 0
    assert out.splitlines() == [f"degree {d}: 0" for d in range(1, 8)]


def test_orbits_csv(capsys):
    code, out = run(
        capsys, "orbits", "3", "9", "--degree", "3", "--format", "csv"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "representative,degree,kind,orbit_size"
    assert lines[1] == "2 1 1 1 1 1 1 1 0,3,real,72"


def test_generic_summary(capsys):
    code, out = run(capsys, "generic", "--degree", "4")
    assert code == 0
    assert out.splitlines()[-1] == "8 real, 2 almost real"


def test_weights_plain(capsys):
    code, out = run(capsys, "weights", "3", "6")
    assert code == 0
    assert "1/3(-1,2,2,2,2,2)" in out


def test_families_null(capsys):
    code, out = run(capsys, "families", "null", "4", "8")
    assert code == 0
    assert "(1,1,1,1,1,1,1,1)" in out
    assert "q = 0" in out


def test_families_affine_pair(capsys):
    code, out = run(
        capsys,
        "families", "affine", "4", "10",
        "--series", "A0", "--sign", "-", "--m", "1", "--pair", "9,2",
    )
    assert code == 0
    assert "(3,2,1,1,1,1,1,1,0,1)" in out


def test_manin_plain(capsys):
    code, out = run(capsys, "manin", "3", "8", "2,1,1,1,1,1,1,1")
    assert code == 0
    assert "a = 3, b = (2,1,1,1,1,1,1,1)" in out


def test_profile_rotations(capsys):
    code, out = run(capsys, "profile", "3", "8", "2,1,1,1,1,1,1,1")
    assert code == 0
    assert out.splitlines() == ["258|147|136", "147|136|258", "136|258|147"]


def test_convert_round_trip(capsys):
    code, out = run(capsys, "convert", "3", "8", "2,1,1,1,1,1,1,1")
    assert code == 0
    assert "m_beta = 3" in out
    code, out = run(
        capsys, "convert", "3", "8", "3,1,3,5,4,3,2,1", "--from-roots"
    )
    assert code == 0
    assert "(2,1,1,1,1,1,1,1)" in out


def test_word_application(capsys):
    code, out = run(capsys, "word", "3", "6", "b,1", "1,1,1,0,0,0")
    assert code == 0
    assert "(-1,-1,-1,0,0,0)" in out


def test_reduce_json(capsys):
    code, out = run(
        capsys, "reduce", "4", "10", "3,3,3,1,1,1,1,1,1,1", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["terminal"] == "almost"
    assert len(data["steps"]) == 1


def test_time_limit_exit_4():
    # run in a fresh interpreter: within this process earlier tests have
    # warmed the enumeration caches, which would let the selftest finish
    # inside any usable time limit
    proc = subprocess.run(
        [
            sys.executable,
            "-c",
            "from jkn.cli import main; raise SystemExit("
            "main(['selftest', '--time-limit', '0.01']))",
        ],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 4
    assert "time limit" in proc.stdout + proc.stderr


def test_selftest_passes(capsys):
    code, out = run(capsys, "selftest")
    assert code == 0
    assert out.splitlines()[-1] == "selftest passed"
    assert "MISMATCH" not in out
