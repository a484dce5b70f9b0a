"""Command-line interface: parsing, rendering, formats, exit codes."""

import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import hypothesis.strategies as st
import pytest
from hypothesis import given

from curvejac.cli import CLIError, decimal_str, fmt_rat, main, parse_class, parse_rational

GOLDEN = Path(__file__).parent / "golden"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParsing:
    def test_rational_literals(self):
        assert parse_rational("3/2") == Fraction(3, 2)
        assert parse_rational("-3/2") == Fraction(-3, 2)
        assert parse_rational("+7") == 7
        assert parse_rational("4/6") == Fraction(2, 3)

    @pytest.mark.parametrize("bad", ["", "1/0", "1.5", "1 /2", "a", "1/-2", "--3"])
    def test_malformed_rationals(self, bad):
        with pytest.raises(CLIError):
            parse_rational(bad)

    def test_class_literals(self):
        cls = parse_class("2,1,1", 2)
        assert cls.coefficients == (2, 1, 1)
        with pytest.raises(CLIError):
            parse_class("2,1", 2)
        with pytest.raises(CLIError):
            parse_class("2,1,1,0", 2)

    @given(st.fractions(min_value=-1000, max_value=1000, max_denominator=977))
    def test_round_trip(self, x):
        assert parse_rational(fmt_rat(x)) == x


class TestDecimalAnnotation:
    def test_basic(self):
        assert decimal_str(Fraction(3, 2)) == "1.500000"
        assert decimal_str(Fraction(16, 3)) == "5.333333"
        assert decimal_str(Fraction(-1, 2)) == "-0.500000"
        assert decimal_str(Fraction(700)) == "700.000000"

    def test_round_half_even(self):
        assert decimal_str(Fraction(1, 2_000_000)) == "0.000000"
        assert decimal_str(Fraction(3, 2_000_000)) == "0.000002"
        assert decimal_str(Fraction(-3, 2_000_000)) == "-0.000002"
        assert decimal_str(Fraction(-1, 2_000_000)) == "0.000000"


class TestTable:
    def test_golden_csv(self, capsys):
        code, out, err = run_cli(capsys, "table", "2", "6", "--format", "csv")
        assert code == 0 and err == ""
        assert out == (GOLDEN / "table_2_6.csv").read_text()

    def test_byte_identical_reruns(self, capsys):
        first = run_cli(capsys, "table", "2", "5", "--format", "csv")
        second = run_cli(capsys, "table", "2", "5", "--format", "csv")
        assert first == second

    def test_default_range(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--format", "csv")
        rows = out.strip().splitlines()
        assert code == 0
        assert len(rows) == 1 + 11  # header plus genus 2..12
        assert rows[1].startswith("2,") and rows[-1].startswith("12,")

    def test_json_rows(self, capsys):
        code, out, _ = run_cli(capsys, "table", "2", "3", "--format", "json")
        assert code == 0
        rows = json.loads(out)
        assert [row["g"] for row in rows] == [2, 3]
        assert rows[0] == {
            "g": 2, "e1": "3/2", "e2": "3/2", "h": "1", "mean": "3/2",
            "margin": "1/2", "e1_dec": "1.500000", "h_dec": "1.000000",
        }

    def test_text_contains_all_columns(self, capsys):
        code, out, _ = run_cli(capsys, "table", "2", "3")
        header = out.splitlines()[0].split()
        assert code == 0
        assert header == ["g", "e1", "e2", "h", "mean", "margin", "e1_dec", "h_dec"]

    def test_invalid_ranges_leave_no_partial_output(self, capsys):
        for argv in (["table", "5", "3"], ["table", "1", "4"]):
            code, out, err = run_cli(capsys, *argv)
            assert code == 2
            assert out == ""
            assert err.startswith("error:") and err.count("\n") == 1


class TestAudit:
    def test_genus_two_text(self, capsys):
        code, out, err = run_cli(capsys, "audit", "-g", "2")
        assert code == 0 and err == ""
        assert "3/2" in out
        assert "1" in out
        assert "1/2" in out
        assert "second inequality VIOLATED by 1/2" in out
        assert "first inequality holds" in out

    def test_json_record(self, capsys):
        code, out, _ = run_cli(capsys, "audit", "-g", "3", "--format", "json")
        record = json.loads(out)
        assert code == 0
        assert record["e1"] == "16/3"
        assert record["h"] == "4"
        assert record["margin"] == "4/3"
        assert record["first_inequality_holds"] is True
        assert record["second_inequality_holds"] is False
        assert record["minima_attained"] is True

    def test_explicit_bundle(self, capsys):
        code, out, _ = run_cli(capsys, "audit", "-g", "2", "-L", "8,1,2")
        assert code == 0
        assert "e1 = 3/2" in out


class TestClassify:
    @pytest.mark.parametrize(
        "coeffs,expected",
        [
            (("2", "1", "1"), "boundary (nef, not ample), defect 0"),
            (("0", "0", "0"), "boundary (apex)"),
            (("1", "1", "1"), "outside (defect -1)"),
            (("3", "1", "1"), "interior (ample and big), defect 1"),
        ],
    )
    def test_text_outputs(self, capsys, coeffs, expected):
        a, b, c = coeffs
        code, out, _ = run_cli(capsys, "classify", "-g", "2", "-a", a, "-b", b, "-c", c)
        assert code == 0
        assert out.strip() == expected

    def test_negative_coefficient_via_long_flag(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "-g", "2", "--a=-1", "-b", "1", "-c", "0")
        assert code == 0
        assert out.startswith("outside")

    def test_json_record(self, capsys):
        code, out, _ = run_cli(
            capsys, "classify", "-g", "2", "-a", "2", "-b", "1", "-c", "1",
            "--format", "json",
        )
        record = json.loads(out)
        assert record["region"] == "boundary"
        assert record["is_nef"] is True and record["is_ample"] is False
        assert record["is_psef"] is True and record["is_big"] is False
        assert record["defect"] == "0"


class TestValueCommands:
    def test_pair(self, capsys):
        code, out, _ = run_cli(capsys, "pair", "-g", "2", "1,1,1", "2,1,1")
        assert code == 0
        assert out.strip() == "2 (~2.000000)"

    def test_pair_negative_value(self, capsys):
        code, out, _ = run_cli(capsys, "pair", "-g", "3", "0,0,1", "0,0,1")
        assert code == 0
        assert out.strip() == "-12 (~-12.000000)"

    def test_intersect(self, capsys):
        code, out, _ = run_cli(capsys, "intersect", "-g", "2", "0,1,0", "0,1,0", "0,1,0")
        assert code == 0
        assert out.strip() == "0 (~0.000000)"

    def test_intersect_wrong_count(self, capsys):
        code, out, err = run_cli(capsys, "intersect", "-g", "2", "0,1,0", "0,1,0")
        assert code == 2
        assert out == ""
        assert "error:" in err and err.count("\n") == 1

    def test_pullback(self, capsys):
        code, out, _ = run_cli(capsys, "pullback", "-g", "3", "-m", "2", "-n", "5")
        assert code == 0
        assert out.strip() == "(12,25,10)"
        code, out, _ = run_cli(capsys, "pullback", "-g", "2", "-m", "0", "-n", "1")
        assert out.strip() == "(0,1,0)"

    def test_pullback_rational_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "pullback", "-g", "2", "-m", "1/2", "-n", "3", "--format", "json"
        )
        record = json.loads(out)
        assert record["class"] == "(1/2,9,3/2)"

    def test_witness(self, capsys):
        code, out, _ = run_cli(capsys, "witness", "-g", "2", "-n", "1")
        assert code == 0
        assert out.strip() == "(8,1,2), degree 8, height 3/2"

    def test_height(self, capsys):
        code, out, _ = run_cli(capsys, "height", "-g", "2", "8,1,2")
        assert code == 0
        assert out.strip() == "height 3/2 (~1.500000), degree 8"

    def test_curve_height(self, capsys):
        code, out, _ = run_cli(capsys, "curve-height", "-g", "5")
        assert code == 0
        assert out.strip() == "curve height 96 (~96.000000)"

    def test_minima(self, capsys):
        code, out, _ = run_cli(capsys, "minima", "-g", "2", "-L", "8,1,2")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "infimum 3/2 (~1.500000)"
        assert lines[1] == "t_star 1/8, s_star 1/32"
        assert lines[2] == "attained by witness (32,1,4), degree 32"

    def test_decompose(self, capsys):
        code, out, _ = run_cli(capsys, "decompose", "-g", "2", "-a", "3", "-b", "1", "-c", "1")
        assert code == 0
        assert out.strip() == "boundary part (2,1,1), alpha1 excess 1"
        code, out, _ = run_cli(capsys, "decompose", "-g", "2", "-a", "5", "-b", "0", "-c", "0")
        assert out.strip() == "degenerate (b = 0): boundary part (0,0,0), alpha1 excess 5"


class TestErrorPaths:
    @pytest.mark.parametrize(
        "argv",
        [
            ["classify", "-g", "1", "-a", "1", "-b", "0", "-c", "0"],
            ["pair", "-g", "2", "1,1", "2,1,1"],
            ["pair", "-g", "2", "1,1,1/0", "2,1,1"],
            ["height", "-g", "2", "0,1,0"],
            ["minima", "-g", "2", "-L", "1,1,1"],
            ["witness", "-g", "2", "-n", "0"],
            ["curve-height", "-g", "2", "-L", "0,1,0"],
            ["audit", "-g", "2", "--format", "csv"],
            ["nonsense"],
        ],
    )
    def test_single_line_diagnostics(self, capsys, argv):
        code, out, err = run_cli(capsys, *argv)
        assert code == 2
        assert out == ""
        assert err.startswith("error:")
        assert err.count("\n") == 1


def test_module_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "curvejac", "pair", "-g", "2", "1,1,1", "2,1,1"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert result.stdout.strip() == "2 (~2.000000)"
