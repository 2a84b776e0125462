"""End-to-end tests of the command-line harness.

Everything runs main() in process so exit codes and output can be
asserted directly; only the determinism check shells out, because
byte-identical stdout across interpreter runs is the actual claim.
"""

import random
import subprocess
import sys

import pytest

from zetalab import DIAG_COLUMNS, ZERO_COLUMNS, read_rows
from zetalab.cli import _UsageError, main, parse_complex
from zetalab.diagnostics import cross_term_fast
from zetalab.report import rows_equal_ignoring_timing
from zetalab.verify import SuiteResult

FIRST_ZERO_T = 14.134725141734702
ORACLE_ZEROS = (14.134725141734702, 21.022039638771552, 25.010857580145696)

# Im part of the first zero of the conversion factor: 2 pi / ln 2.
FACTOR_ZERO_T = 9.064720283654388


# --- complex literals -----------------------------------------------------------


def test_parse_complex_accepts_mathematical_i():
    assert parse_complex("0.5+14.1i") == complex(0.5, 14.1)
    assert parse_complex("1-2I") == complex(1.0, -2.0)
    assert parse_complex("-1.5i") == complex(0.0, -1.5)


def test_parse_complex_accepts_reals_j_and_spaces():
    assert parse_complex("2") == complex(2.0, 0.0)
    assert parse_complex("3+4j") == complex(3.0, 4.0)
    assert parse_complex(" 0.5 + 2i ") == complex(0.5, 2.0)


def test_parse_complex_rejects_garbage():
    for text in ("abc", "1++2i", "", "0.5+", "i2"):
        with pytest.raises(_UsageError):
            parse_complex(text)


# --- exit codes -----------------------------------------------------------------


def test_usage_problems_exit_one(tmp_path, capsys):
    out = str(tmp_path / "x.csv")
    bad_argvs = [
        [],
        ["frobnicate"],
        ["eval", "--s", "abc", "--what", "eta"],
        ["eval", "--s", "2"],
        ["zeros"],
        ["zeros", "8", "3"],
        ["diag", "--out", out],
        ["diag", "--sigma-grid", "0.3", "--out", out],
        ["diag", "--sigma-grid", "0.3", "--t", "5", "--n-list", "100,10", "--out", out],
        ["sweep-u", "--t", "5", "--n", "0", "--grid", "0.2:0.8:5", "--out", out],
        ["sweep-u", "--t", "5", "--n", "10", "--grid", "0.9:0.1:5", "--out", out],
        ["sweep-u", "--t", "5", "--n", "10", "--grid", "0.2:0.8", "--out", out],
        ["verify", "nonsense"],
        ["eval", "--s", "2", "--what", "eta", "--format", "xml", "--out", out],
    ]
    for argv in bad_argvs:
        assert main(argv) == 1, argv
        assert "usage error:" in capsys.readouterr().err, argv


def test_domain_problems_exit_two(tmp_path, capsys):
    pole = ["eval", "--s", "1", "--what", "zeta"]
    singular = [
        "eval",
        "--s",
        f"1+{FACTOR_ZERO_T}i",
        "--what",
        "zeta",
        "--no-fallback",
    ]
    unwritable = [
        "eval",
        "--s",
        "2",
        "--what",
        "zeta",
        "--out",
        str(tmp_path / "no-such-dir" / "x.csv"),
    ]
    for argv in (pole, singular, unwritable):
        assert main(argv) == 2, argv
        assert "error:" in capsys.readouterr().err, argv


def test_verify_failure_exits_three(monkeypatch, capsys):
    def stub(suite, seed):
        return [SuiteResult(name="stub", passed=False, lines=("stub -> FAIL",))]

    monkeypatch.setattr("zetalab.cli.run_suite", stub)
    assert main(["verify", "identity"]) == 3
    out = capsys.readouterr().out
    assert "stub -> FAIL" in out
    assert "verify identity: FAIL (seed=42)" in out


def test_keyboard_interrupt_exits_one(monkeypatch, capsys):
    def stub(suite, seed):
        raise KeyboardInterrupt

    monkeypatch.setattr("zetalab.cli.run_suite", stub)
    assert main(["verify", "identity"]) == 1
    assert "interrupted" in capsys.readouterr().err


def test_help_uses_standard_argparse_exit():
    with pytest.raises(SystemExit) as info:
        main(["--help"])
    assert info.value.code == 0


# --- eval -----------------------------------------------------------------------


def test_eval_prints_human_line_and_flat_row(capsys):
    assert main(["eval", "--s", "2", "--what", "zeta"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("zeta(2 + 0i) = 1.6449340668")
    row_line = next(line for line in lines if line.startswith("row:"))
    fields = row_line[len("row:") :].strip().split(",")
    assert len(fields) == len(DIAG_COLUMNS)
    row = dict(zip(DIAG_COLUMNS, fields))
    assert row["experiment_id"] == "eval-zeta"
    assert float(row["sigma"]) == 2.0
    assert float(row["t"]) == 0.0
    assert int(row["N"]) > 0
    assert "method=accelerated" in row["extra"]


def test_eval_writes_one_json_row(tmp_path):
    out = str(tmp_path / "eval.json")
    argv = ["eval", "--s", "0.5+14.134725i", "--what", "eta", "--out", out, "--format", "json"]
    assert main(argv) == 0
    columns, rows = read_rows(out, "json")
    assert columns == tuple(DIAG_COLUMNS)
    assert len(rows) == 1
    row = rows[0]
    assert row["experiment_id"] == "eval-eta"
    assert row["sigma"] == 0.5
    assert row["t"] == 14.134725
    assert row["N"] > 0
    parts = dict(bit.split("=", 1) for bit in row["extra"].split(" "))
    # eta is tiny this close to the first zero ordinate
    assert float(parts["abs"]) < 1e-5
    assert float(parts["error_estimate"]) <= 1e-11


def test_eval_functional_residual_is_small(capsys):
    assert main(["eval", "--s", "0.3+7i", "--what", "functional-residual"]) == 0
    first = capsys.readouterr().out.splitlines()[0]
    assert first.startswith("functional residual at")
    assert float(first.rsplit("=", 1)[1]) < 1e-6


# --- diag -----------------------------------------------------------------------


def test_diag_preset_rows_carry_the_identity(tmp_path):
    out = str(tmp_path / "diag.csv")
    assert main(["diag", "--preset", "case-critical", "--out", out]) == 0
    columns, rows = read_rows(out, "csv")
    assert columns == tuple(DIAG_COLUMNS)
    assert [row["N"] for row in rows] == [100, 1000, 10000, 100000, 1000000]
    for row in rows:
        assert row["experiment_id"] == "case-critical"
        assert row["sigma"] == 0.5
        assert row["t"] == 14.134725
        assert row["S_N"] == row["P_N"] + 2.0 * row["T_N"]
        assert row["eta_abs_sq"] >= 0.0
        assert row["identity_residual"] < 1e-12
        # divergence diagnostic column reproduces T + P/2 bit for bit
        assert float(row["extra"]) == row["T_N"] + 0.5 * row["P_N"]
        assert isinstance(row["wall_time_ms"], int)


def test_diag_explicit_grid_orders_rows_sigma_major(tmp_path):
    out = str(tmp_path / "grid.csv")
    argv = [
        "diag",
        "--sigma-grid",
        "0.3,0.7",
        "--t",
        "2.0,5.0",
        "--n-list",
        "10,100",
        "--out",
        out,
    ]
    assert main(argv) == 0
    _, rows = read_rows(out, "csv")
    keys = [(row["sigma"], row["t"], row["N"]) for row in rows]
    assert keys == [
        (0.3, 2.0, 10),
        (0.3, 2.0, 100),
        (0.3, 5.0, 10),
        (0.3, 5.0, 100),
        (0.7, 2.0, 10),
        (0.7, 2.0, 100),
        (0.7, 5.0, 10),
        (0.7, 5.0, 100),
    ]
    assert all(row["experiment_id"] == "diag" for row in rows)


def test_diag_explicit_values_override_preset(tmp_path):
    out = str(tmp_path / "over.csv")
    argv = ["diag", "--preset", "case-lower", "--n-list", "10,20", "--out", out]
    assert main(argv) == 0
    _, rows = read_rows(out, "csv")
    assert [row["N"] for row in rows] == [10, 20]
    assert all(row["sigma"] == 0.3 for row in rows)


# --- zeros ----------------------------------------------------------------------


def test_zeros_report_finds_the_first_three(tmp_path):
    out = str(tmp_path / "zeros.csv")
    assert main(["zeros", "10", "30", "0.1", "--out", out]) == 0
    columns, rows = read_rows(out, "csv")
    assert columns == tuple(ZERO_COLUMNS)
    assert len(rows) == 3
    for row, want in zip(rows, ORACLE_ZEROS):
        assert abs(row["refined_t"] - want) < 1e-9
        assert row["t_lo"] <= row["refined_t"] <= row["t_hi"]
        assert row["iterations"] > 20
        assert row["z_residual"] < 1e-9
        assert row["eta_residual"] < 1e-9
        assert row["zeta_residual"] < 1e-9
        assert row["verdict"] == "both-zero"
        assert row["eta_abs"] < 1e-6
        assert row["zeta_abs"] < 1e-6
        assert row["factor_abs"] > 0.1
        assert row["conjugate_residual"] < 1e-6


def test_zeros_flag_form_matches_positional_form(tmp_path):
    out_a = str(tmp_path / "a.csv")
    out_b = str(tmp_path / "b.csv")
    assert main(["zeros", "14.0", "14.3", "0.05", "--out", out_a]) == 0
    assert main(["zeros", "--t-lo", "14.0", "--t-hi", "14.3", "--step", "0.05", "--out", out_b]) == 0
    _, rows_a = read_rows(out_a, "csv")
    _, rows_b = read_rows(out_b, "csv")
    assert len(rows_a) == 1
    assert rows_equal_ignoring_timing(rows_a, rows_b)


def test_zeros_empty_scan_writes_header_only(tmp_path, capsys):
    out = str(tmp_path / "none.csv")
    assert main(["zeros", "1", "10", "--out", out]) == 0
    columns, rows = read_rows(out, "csv")
    assert columns == tuple(ZERO_COLUMNS)
    assert rows == []
    assert main(["zeros", "1", "10"]) == 0
    assert "0 candidates" in capsys.readouterr().out


def test_zeros_without_out_prints_verdict_lines(capsys):
    assert main(["zeros", "14.0", "14.3", "--step", "0.05"]) == 0
    out = capsys.readouterr().out
    assert "zero at t=14.1347251417" in out
    assert "verdict=both-zero" in out
    assert "1 candidates" in out


# --- sweep-u --------------------------------------------------------------------


def test_sweep_u_rows_match_the_library_call(tmp_path):
    out = str(tmp_path / "sweep.csv")
    argv = ["sweep-u", "--t", "7.25", "--n", "500", "--grid", "0.2:0.8:7", "--out", out]
    assert main(argv) == 0
    _, rows = read_rows(out, "csv")
    assert len(rows) == 7
    assert [row["sigma"] for row in rows] == sorted(row["sigma"] for row in rows)
    assert rows[0]["sigma"] == 0.2
    assert rows[-1]["sigma"] == pytest.approx(0.8, abs=1e-15)
    for row in rows:
        assert row["t"] == 7.25
        assert row["N"] == 500
        assert row["T_N"] == cross_term_fast(row["sigma"], 7.25, 500)


def test_sweep_u_extra_holds_forward_differences(tmp_path):
    out = str(tmp_path / "fd.csv")
    argv = ["sweep-u", "--t", "7.25", "--n", "200", "--grid", "0.3:0.7:5", "--out", out]
    assert main(argv) == 0
    _, rows = read_rows(out, "csv")
    for here, there in zip(rows, rows[1:]):
        assert float(here["extra"]) == there["T_N"] - here["T_N"]
    assert not rows[-1]["extra"]


# --- verify ---------------------------------------------------------------------


def test_verify_passes_in_process(capsys):
    assert main(["verify", "identity", "--seed", "7"]) == 0
    out = capsys.readouterr().out
    assert out.strip().endswith("verify identity: PASS (seed=7)")


def test_verify_all_is_byte_identical_across_runs():
    argv = [sys.executable, "-m", "zetalab.cli", "verify", "all", "--seed", "42"]
    first = subprocess.run(argv, capture_output=True)
    second = subprocess.run(argv, capture_output=True)
    assert first.returncode == 0, first.stderr
    assert second.returncode == 0
    assert first.stdout == second.stdout
    assert b"verify all: PASS (seed=42)" in first.stdout


# --- argv fuzzing ---------------------------------------------------------------


def test_randomized_argv_always_maps_to_an_exit_code(tmp_path, capsys):
    """main() must turn any argv into one of the documented exit codes."""
    out = str(tmp_path / "fuzz-out")
    pool = [
        "eval", "diag", "zeros", "sweep-u", "verify",
        "--s", "0.5+3i", "2", "abc", "",
        "--what", "eta", "zeta", "gamma", "functional-residual",
        "--tol", "1e-3", "--no-fallback",
        "--out", out, "--format", "csv", "json",
        "--sigma-grid", "0.3,0.6", "--t", "5.0", "--n-list", "10,50",
        "--n", "100", "--grid", "0.2:0.8:5", "0.9:0.1:4",
        "identity", "--seed", "7", "--step", "0.5", "3", "8",
        "--t-lo", "--t-hi", "-x",
    ]
    rng = random.Random(20260816)
    for _ in range(1000):
        argv = [rng.choice(pool) for _ in range(rng.randint(1, 6))]
        code = main(argv)
        assert code in (0, 1, 2, 3), argv
        capsys.readouterr()
