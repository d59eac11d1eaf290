# -*- coding: utf-8 -*-
import io
import math

import pytest

from haftools.cli import HafToolsCLI
from haftools.core import matchings
from haftools.core.verify import LEVEL_PARAMS
from haftools.utils import table_io
from haftools.utils.constants import ExitCode, TemplateKind, VerifyLevel
from haftools.utils.models import OutputRecord
from haftools.utils.settings import Settings
from haftools.utils.table_io import load_sequence_fixture, parse_table_csv


class TestTable:
    def test_c_matches_fixture(self, run_cli, fixture_dir):
        result = run_cli("table", "C", "12", "--method", "closed", "--format", "csv")
        assert result.code == ExitCode.OK
        assert result.out == (fixture_dir / "table_c.csv").read_text(encoding="utf-8")

    def test_d_recurrence_matches_fixture(self, run_cli, fixture_dir):
        result = run_cli("table", "D", "12", "--method", "recurrence")
        assert result.code == 0
        assert result.out == (fixture_dir / "table_d.csv").read_text(encoding="utf-8")

    @pytest.mark.parametrize("method", ["series", "brute"])
    def test_other_methods(self, run_cli, method):
        expected = run_cli("table", "C", "10").out
        assert run_cli("table", "C", "10", "--method", method).out == expected

    def test_json_equivalent_to_csv(self, run_cli):
        csv_out = run_cli("table", "D", "8").out
        record = OutputRecord.parse(run_cli("table", "D", "8", "--format", "json").out)
        assert record.command == "table"
        assert record.params == {"kind": "D", "n_max": 8, "method": "closed"}
        assert record.result["rows"] == parse_table_csv(csv_out, TemplateKind.D).as_grid()

    def test_brute_force_cap(self, run_cli):
        result = run_cli("table", "C", "15", "--method", "brute")
        assert result.code == ExitCode.USAGE
        assert "14" in result.err

    def test_cap_from_settings(self, run_cli):
        result = run_cli("table", "C", "15", "--method", "brute", settings=Settings(max_brute=16))
        assert result.code == 0
        assert result.out == run_cli("table", "C", "15").out

    def test_cap_from_environment(self, monkeypatch):
        monkeypatch.setenv("HAFTOOLS_MAX_BRUTE", "4")
        stdout, stderr = io.StringIO(), io.StringIO()
        code = HafToolsCLI(stdout=stdout, stderr=stderr).run(["table", "C", "6", "--method", "brute"])
        assert code == ExitCode.USAGE

    @pytest.mark.parametrize("argv", [
        ["table", "J", "4"],
        ["table", "C", "-1"],
        ["table", "C", "four"],
        ["table", "C", "4", "--method", "magic"],
        ["table", "C", "4", "--format", "xml"],
    ])
    def test_usage_errors(self, run_cli, argv):
        assert run_cli(*argv).code == ExitCode.USAGE


class TestHafnian:
    @pytest.mark.parametrize("argv, expected", [
        (["C", "3", "0", "1"], "7"),
        (["D", "3", "0", "1"], "1"),
        (["D", "2", "sym", "sym"], "2a^2 + ab"),
        (["C", "2", "sym", "sym"], "a^2 + 2b^2"),
        (["J", "2", "0", "5"], "75"),
        (["J", "2", "0", "sym"], "3b^2"),
        (["C", "0", "4", "9"], "1"),
        (["D", "3", "b", "a"], "a^3 + 4a^2b + 7ab^2 + 3b^3"),
    ])
    def test_values(self, run_cli, argv, expected):
        result = run_cli("hafnian", *argv)
        assert result.code == 0, result.err
        assert result.out == expected + "\n"

    @pytest.mark.parametrize("kind", ["C", "D", "J"])
    def test_brute_method_agrees(self, run_cli, kind):
        formula = run_cli("hafnian", kind, "4", "sym", "sym").out
        assert run_cli("hafnian", kind, "4", "sym", "sym", "--method", "brute").out == formula

    def test_custom_template_file(self, run_cli, tmp_path):
        path = tmp_path / "c6.txt"
        path.write_text("# C_6\n6\ntoeplitz: 0 0 1 0 0 0\n", encoding="utf-8")
        assert run_cli("hafnian", str(path), "3", "0", "1").out == "7\n"
        assert run_cli("hafnian", str(path), "3", "sym", "sym").out == run_cli("hafnian", "C", "3", "sym", "sym").out

    def test_custom_template_order_mismatch(self, run_cli, tmp_path):
        path = tmp_path / "c6.txt"
        path.write_text("6\ntoeplitz: 0 0 1 0 0 0\n", encoding="utf-8")
        assert run_cli("hafnian", str(path), "2", "0", "1").code == ExitCode.USAGE

    def test_custom_template_over_cap(self, run_cli, tmp_path):
        path = tmp_path / "c6.txt"
        path.write_text("6\ntoeplitz: 0 0 1 0 0 0\n", encoding="utf-8")
        result = run_cli("hafnian", str(path), "3", "0", "1", settings=Settings(max_brute=4))
        assert result.code == ExitCode.USAGE

    @pytest.mark.parametrize("kind", ["C", "D", "J"])
    def test_brute_cap_for_builtin_kinds(self, run_cli, kind):
        result = run_cli("hafnian", kind, "3", "0", "1", "--method", "brute", settings=Settings(max_brute=4))
        assert result.code == ExitCode.USAGE
        assert "4" in result.err

    def test_formula_ignores_brute_cap(self, run_cli):
        result = run_cli("hafnian", "C", "7", "0", "1", settings=Settings(max_brute=4))
        assert result.code == 0
        assert int(result.out) == load_sequence_fixture(TemplateKind.C)[6]

    def test_mixed_degree_order(self, run_cli):
        assert run_cli("hafnian", "C", "2", "a", "b^2").out == "a^2 + 2b^4\n"

    def test_code_in_argument_rejected(self, run_cli, tmp_path):
        marker = tmp_path / "marker"
        result = run_cli("hafnian", "C", "2", f"__import__('pathlib').Path(r'{marker}').touch() or a", "1")
        assert result.code == ExitCode.USAGE
        assert not marker.exists()

    @pytest.mark.parametrize("argv", [
        ["hafnian", "C", "2", "a +", "1"],
        ["hafnian", "C", "2", "1/2", "1"],
        ["hafnian", "C", "-1", "0", "1"],
        ["hafnian", "missing-template.txt", "2", "0", "1"],
        ["hafnian", "C", "2", "0"],
    ])
    def test_usage_errors(self, run_cli, argv):
        assert run_cli(*argv).code == ExitCode.USAGE

    def test_json(self, run_cli):
        record = OutputRecord.parse(run_cli("hafnian", "C", "3", "0", "1", "--format", "json").out)
        assert record.result == 7
        out = run_cli("hafnian", "D", "2", "sym", "sym", "--format", "json").out
        assert OutputRecord.parse(out).result == "2a^2 + ab"
        assert "timing_ms" not in out

    def test_json_timing(self, run_cli):
        result = run_cli("hafnian", "C", "3", "0", "1", "--format", "json", "--timing")
        record = OutputRecord.parse(result.out)
        assert record.result == 7
        assert record.timing_ms is not None and record.timing_ms >= 0
        assert "timing_ms=" in result.err


class TestSequence:
    @pytest.mark.parametrize("kind", ["C", "D"])
    def test_fixture_terms(self, run_cli, kind):
        result = run_cli("sequence", kind, "10", "0", "1")
        assert result.code == 0
        assert [int(line) for line in result.lines] == load_sequence_fixture(TemplateKind.from_name(kind))

    def test_check_fixture(self, run_cli):
        result = run_cli("sequence", "C", "12", "0", "1", "--check-fixture")
        assert result.code == 0
        assert len(result.lines) == 12

    def test_fixture_mismatch(self, run_cli, monkeypatch):
        monkeypatch.setattr(table_io, "load_sequence_fixture", lambda kind, base_path=None: [1] * 10)
        result = run_cli("sequence", "C", "5", "0", "1", "--check-fixture")
        assert result.code == ExitCode.FIXTURE_MISMATCH

    def test_check_fixture_requires_zero_one(self, run_cli):
        assert run_cli("sequence", "C", "5", "1", "1", "--check-fixture").code == ExitCode.USAGE

    def test_symbolic(self, run_cli):
        result = run_cli("sequence", "D", "2", "sym", "sym")
        assert result.lines == ["a", "2a^2 + ab"]

    @pytest.mark.parametrize("argv", [
        ["sequence", "C", "0", "0", "1"],
        ["sequence", "J", "3", "0", "1"],
    ])
    def test_usage_errors(self, run_cli, argv):
        assert run_cli(*argv).code == ExitCode.USAGE


class TestVerify:
    def test_quick_passes(self, run_cli):
        result = run_cli("verify", "quick")
        assert result.code == ExitCode.OK, result.out
        assert result.lines
        assert all(line.startswith("PASS ") for line in result.lines)

    def test_level_option(self, run_cli):
        result = run_cli("verify", "--level", "quick", "--format", "json")
        record = OutputRecord.parse(result.out)
        assert record.params == {"level": "quick"}
        assert all(item["passed"] for item in record.result)

    def test_injected_fault(self, run_cli, monkeypatch):
        def flipped(n, k, counter=None):
            return math.comb(n, k) + (1 if 0 < k < n else 0)

        monkeypatch.setattr(matchings, "binomial", flipped)
        result = run_cli("verify", "quick")
        assert result.code == ExitCode.VERIFY_FAILED
        assert any(line.startswith("FAIL ") for line in result.lines)

    def test_brute_cap_does_not_shrink_sweep(self, run_cli):
        result = run_cli("verify", "quick", settings=Settings(max_brute=4))
        assert result.code == ExitCode.OK
        expected = 2 * (LEVEL_PARAMS[VerifyLevel.QUICK]["table_n"] + 1)
        assert f"PASS four-way-agreement [{expected}]" in result.lines

    def test_unknown_level(self, run_cli):
        assert run_cli("verify", "slow").code == ExitCode.USAGE


class TestBench:
    def test_c_slope(self, run_cli):
        result = run_cli("bench", "C", "10,20,40,80")
        assert result.code == 0
        assert result.lines[0].split() == ["m", "ops"]
        assert [int(line.split()[0]) for line in result.lines[1:-1]] == [10, 20, 40, 80]
        slope = float(result.lines[-1].split("=")[1])
        assert 2.3 <= slope <= 3.7

    def test_d_slope(self, run_cli):
        slope = float(run_cli("bench", "D", "10,20,40").lines[-1].split("=")[1])
        assert 3.2 <= slope <= 4.8

    def test_smallest_case(self, run_cli):
        result = run_cli("bench", "C", "1")
        assert result.code == 0
        assert result.lines[-1] == "slope=nan"

    def test_timing_column(self, run_cli):
        result = run_cli("bench", "C", "4,8", "--timing")
        assert result.lines[0].split() == ["m", "ops", "wall_ms"]
        assert "timing_ms=" in result.err

    @pytest.mark.parametrize("m_list", ["0,4", "x", ","])
    def test_usage_errors(self, run_cli, m_list):
        assert run_cli("bench", "C", m_list).code == ExitCode.USAGE


class TestGeneral:
    def test_no_command(self, run_cli):
        assert run_cli().code == ExitCode.USAGE

    def test_unknown_command(self, run_cli):
        result = run_cli("plot", "C")
        assert result.code == ExitCode.USAGE
        assert result.err

    def test_help(self, run_cli, capsys):
        assert run_cli("--help").code == 0

    def test_deterministic_stdout(self, run_cli):
        argv = ("hafnian", "D", "5", "sym", "sym")
        assert run_cli(*argv).out == run_cli(*argv).out
        first = run_cli("bench", "D", "5,10")
        second = run_cli("bench", "D", "5,10")
        assert first.out == second.out

    def test_timing_goes_to_stderr(self, run_cli):
        plain = run_cli("hafnian", "C", "5", "0", "1")
        timed = run_cli("hafnian", "C", "5", "0", "1", "--timing")
        assert timed.out == plain.out
        assert "timing_ms=" in timed.err

    def test_log_follows_each_instance(self, run_cli):
        argv = ("--log", "debug", "sequence", "C", "3", "0", "1", "--check-fixture")
        for result in (run_cli(*argv), run_cli(*argv)):
            assert "DEBUG (haftools.utils.table_io)" in result.err

    def test_log_level_option(self, run_cli):
        assert run_cli("--log", "info", "table", "C", "4").code == 0
        assert run_cli("--log", "loud", "table", "C", "4").code == ExitCode.USAGE
