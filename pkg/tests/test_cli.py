import json
import subprocess
import sys

import pytest
from click.testing import CliRunner

from litigacost.cli import main

from .conftest import document_text, raw_hypothesis_scenario


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def policy_file(tmp_path):
    def write(threshold: str, name: str = "policy.json") -> str:
        path = tmp_path / name
        path.write_text(json.dumps({"plaintiff_settle_threshold": threshold}))
        return str(path)

    return write


class TestEval:
    def test_csv_output(self, runner, scenario_file):
        result = runner.invoke(main, ["eval", "--scenarios", scenario_file(), "--format", "csv"])
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert len(lines) == 3
        assert "2,4000.00,0.0400,Litigate,ProposeSettlement,false" in lines[1]
        assert "64000.00,0.6400" in lines[2]

    def test_table_is_default_format(self, runner, scenario_file):
        result = runner.invoke(main, ["eval", "--scenarios", scenario_file()])
        assert result.exit_code == 0
        assert "plaintiff_action" in result.stdout.splitlines()[0]

    def test_json_output(self, runner, scenario_file):
        result = runner.invoke(main, ["eval", "--scenarios", scenario_file(), "--format", "json"])
        assert result.exit_code == 0
        payload = json.loads(result.stdout)
        assert [r["id"] for r in payload["results"]] == ["hyp-1", "hyp-2"]
        assert payload["results"][0]["tc"] == "4000.00"

    def test_policy_flag(self, runner, scenario_file, policy_file):
        result = runner.invoke(
            main,
            [
                "eval",
                "--scenarios",
                scenario_file(),
                "--format",
                "json",
                "--policy",
                policy_file("0.01"),
            ],
        )
        assert result.exit_code == 0
        rows = json.loads(result.stdout)["results"]
        assert all(r["plaintiff_action"] == "ProposeSettlement" for r in rows)

    def test_policy_env_var(self, runner, scenario_file, policy_file):
        result = runner.invoke(
            main,
            ["eval", "--scenarios", scenario_file(), "--format", "json"],
            env={"LITIGACOST_POLICY": policy_file("0.01")},
        )
        assert result.exit_code == 0
        rows = json.loads(result.stdout)["results"]
        assert rows[0]["plaintiff_action"] == "ProposeSettlement"

    def test_policy_flag_wins_over_env(self, runner, scenario_file, policy_file):
        # env says settle at 1%, flag says only at 90%
        result = runner.invoke(
            main,
            [
                "eval",
                "--scenarios",
                scenario_file(),
                "--format",
                "json",
                "--policy",
                policy_file("0.9", "flag.json"),
            ],
            env={"LITIGACOST_POLICY": policy_file("0.01", "env.json")},
        )
        assert result.exit_code == 0
        rows = json.loads(result.stdout)["results"]
        assert all(r["plaintiff_action"] == "Litigate" for r in rows)

    def test_validation_failure_prints_no_partial_output(self, runner, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(
            document_text(
                raw_hypothesis_scenario("ok"),
                raw_hypothesis_scenario("broken", claim="-5.00"),
            )
        )
        result = runner.invoke(main, ["eval", "--scenarios", str(path), "--format", "csv"])
        assert result.exit_code == 2
        assert result.stdout == ""
        assert "error [NonPositiveClaim] broken claim:" in result.stderr

    def test_malformed_document(self, runner, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{")
        result = runner.invoke(main, ["eval", "--scenarios", str(path)])
        assert result.exit_code == 2
        assert "MalformedJson" in result.stderr

    def test_missing_file_is_io_failure(self, runner, tmp_path):
        result = runner.invoke(main, ["eval", "--scenarios", str(tmp_path / "absent.json")])
        assert result.exit_code == 3
        assert "IoError" in result.stderr

    def test_bad_policy_file(self, runner, scenario_file, tmp_path):
        path = tmp_path / "policy.json"
        path.write_text('{"plaintiff_settle_threshold": "nope"}')
        result = runner.invoke(
            main, ["eval", "--scenarios", scenario_file(), "--policy", str(path)]
        )
        assert result.exit_code == 2
        assert "InvalidPolicy" in result.stderr


class TestSweep:
    def test_csv_grid(self, runner, scenario_file):
        result = runner.invoke(
            main,
            [
                "sweep",
                "--scenarios",
                scenario_file(),
                "--id",
                "hyp-1",
                "--param",
                "confirmation",
                "--min",
                "0.5",
                "--max",
                "0.8",
                "--steps",
                "4",
                "--format",
                "csv",
            ],
        )
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert len(lines) == 5
        assert lines[2].startswith("confirmation,0.6000,44000.00,0.4400")

    def test_unknown_id(self, runner, scenario_file):
        result = runner.invoke(
            main,
            ["sweep", "--scenarios", scenario_file(), "--id", "nope",
             "--min", "0.5", "--max", "0.8", "--steps", "2"],
        )
        assert result.exit_code == 2
        assert "UnknownScenarioId" in result.stderr

    def test_degenerate_range(self, runner, scenario_file):
        result = runner.invoke(
            main,
            ["sweep", "--scenarios", scenario_file(), "--id", "hyp-1",
             "--min", "0.5", "--max", "0.5", "--steps", "2"],
        )
        assert result.exit_code == 2
        assert "InvalidRange" in result.stderr

    def test_unsupported_parameter(self, runner, scenario_file):
        result = runner.invoke(
            main,
            ["sweep", "--scenarios", scenario_file(), "--id", "hyp-1",
             "--param", "claim", "--min", "0.5", "--max", "0.8", "--steps", "2"],
        )
        assert result.exit_code == 2

    def test_unparseable_bound(self, runner, scenario_file):
        result = runner.invoke(
            main,
            ["sweep", "--scenarios", scenario_file(), "--id", "hyp-1",
             "--min", "zero", "--max", "0.8", "--steps", "2"],
        )
        assert result.exit_code == 2
        assert "InvalidFraction" in result.stderr


class TestBreakeven:
    def test_prints_fraction(self, runner, scenario_file):
        result = runner.invoke(
            main,
            ["breakeven", "--scenarios", scenario_file(), "--id", "hyp-1",
             "--target-fraction", "0.10"],
        )
        assert result.exit_code == 0
        assert result.stdout == "0.7700\n"

    def test_recovers_hypothesis_one(self, runner, scenario_file):
        result = runner.invoke(
            main,
            ["breakeven", "--scenarios", scenario_file(), "--id", "hyp-1",
             "--target-fraction", "0.04"],
        )
        assert result.stdout == "0.8000\n"

    def test_no_solution_is_an_answer(self, runner, scenario_file):
        result = runner.invoke(
            main,
            ["breakeven", "--scenarios", scenario_file(), "--id", "hyp-1",
             "--target-fraction", "2.0"],
        )
        assert result.exit_code == 0
        assert result.stdout.startswith("no solution")

    def test_zero_coefficient_is_an_error(self, runner, tmp_path):
        raw = raw_hypothesis_scenario("flat")
        raw["indicators"] = {"z": 1, "kb": 0, "t_long": 1, "y": 1, "ka": 1, "t_short": 0}
        path = tmp_path / "flat.json"
        path.write_text(document_text(raw))
        result = runner.invoke(
            main,
            ["breakeven", "--scenarios", str(path), "--id", "flat",
             "--target-fraction", "0.1"],
        )
        assert result.exit_code == 2
        assert "ZeroRiskCoefficient" in result.stderr


class TestCompare:
    def test_builtin_presets(self, runner, scenario_file):
        result = runner.invoke(
            main,
            ["compare", "--scenarios", scenario_file(), "--id", "hyp-1",
             "--before", "BG-pre-reform", "--after", "reformed", "--format", "csv"],
        )
        assert result.exit_code == 0
        assert result.stdout.splitlines()[1] == "hyp-1,4000.00,-6000.00,-10000.00,ReformEffective"

    def test_document_preset(self, runner, tmp_path):
        text = document_text(
            raw_hypothesis_scenario(),
            presets=[
                {
                    "name": "strict-court",
                    "indicators": {"z": 1, "kb": 1, "t_long": 1, "y": 0, "ka": 0, "t_short": 0},
                }
            ],
        )
        path = tmp_path / "with-presets.json"
        path.write_text(text)
        result = runner.invoke(
            main,
            ["compare", "--scenarios", str(path), "--id", "hyp-1",
             "--before", "strict-court", "--after", "strict-court", "--format", "json"],
        )
        assert result.exit_code == 0
        payload = json.loads(result.stdout)
        assert payload["verdict"] == "ReformIneffective"
        assert payload["delta"] == "0.00"

    def test_unknown_preset(self, runner, scenario_file):
        result = runner.invoke(
            main,
            ["compare", "--scenarios", scenario_file(), "--id", "hyp-1",
             "--before", "BG-pre-reform", "--after", "utopia"],
        )
        assert result.exit_code == 2
        assert "UnknownPreset" in result.stderr


class TestServe:
    def test_bad_listen_address(self, runner):
        result = runner.invoke(main, ["serve", "--listen", "nonsense"])
        assert result.exit_code == 2
        assert "InvalidListenAddress" in result.stderr


def test_console_script_smoke(scenario_file):
    # the installed entry point, exercised outside CliRunner
    proc = subprocess.run(
        [sys.executable, "-m", "litigacost.cli", "eval", "--scenarios", scenario_file(),
         "--format", "csv"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    assert "2,4000.00,0.0400,Litigate,ProposeSettlement,false" in proc.stdout


def test_help_lists_subcommands():
    runner = CliRunner()
    result = runner.invoke(main, ["--help"])
    assert result.exit_code == 0
    for name in ("eval", "sweep", "breakeven", "compare", "serve"):
        assert name in result.stdout
