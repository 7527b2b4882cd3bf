"""Command-line surface: exit codes, report formats, record logs and config files."""

from __future__ import annotations

import csv
import json
import sys
from pathlib import Path

import pytest
from typer.testing import CliRunner

sys.path.append(str(Path(__file__).resolve().parents[1]))

from catalog import catalog_names
from check_types import CheckResult, Report
from logger import ReportLogger
from runner import DEFAULTS, LogFormat, OutputFormat, RunSettings, app, merge_config, render_text

runner = CliRunner()

EXIT_CASES = [
    (["d2", "--catalog", "s3-a3"], 0),
    (["d2", "--catalog", "m2-diagonal"], 0),
    (["normality", "--catalog", "s3-a3"], 0),
    (["normality", "--catalog", "s3-c2"], 1),
    (["bialgebroid", "--catalog", "s3-c2"], 2),
    (["d2", "--catalog", "no-such-instance"], 2),
    (["d2"], 2),
]


@pytest.mark.parametrize("args, code", EXIT_CASES)
def test_exit_codes(args, code) -> None:
    result = runner.invoke(app, args)
    assert result.exit_code == code


def test_missing_file_is_an_input_error(tmp_path) -> None:
    result = runner.invoke(app, ["d2", str(tmp_path / "absent.json")])
    assert result.exit_code == 2


def test_file_and_catalog_are_exclusive(instances_dir) -> None:
    result = runner.invoke(app, ["d2", str(instances_dir / "s3-a3.json"), "--catalog", "s3-a3"])
    assert result.exit_code == 2


def test_text_report(instances_dir) -> None:
    result = runner.invoke(app, ["d2", str(instances_dir / "m2-diagonal.json")])
    assert result.exit_code == 0
    assert "📋 m2-diagonal · d2" in result.stdout
    assert "✅ quasibases verified in A⊗_B A" in result.stdout
    assert "结果: 通过" in result.stdout


def test_failures_are_marked() -> None:
    result = runner.invoke(app, ["normality", "--catalog", "s3-c2"])
    assert "❌ K is normal in A" in result.stdout


def test_structured_report() -> None:
    result = runner.invoke(app, ["d2", "--catalog", "m2-diagonal", "--format", "structured"])
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["instance"] == "m2-diagonal"
    assert payload["command"] == "d2"
    assert payload["passed"] is True
    assert all(check["verdict"] in ("pass", "info") for check in payload["checks"])


def test_catalog_listing() -> None:
    result = runner.invoke(app, ["catalog"])
    assert result.exit_code == 0
    assert "内置实例" in result.stdout
    for name in catalog_names():
        assert f"- {name}:" in result.stdout


def test_jsonl_log(tmp_path) -> None:
    log = tmp_path / "checks.jsonl"
    result = runner.invoke(app, ["d2", "--catalog", "m2-diagonal", "--log", str(log)])
    assert result.exit_code == 0
    records = [json.loads(line) for line in log.read_text(encoding="utf-8").splitlines()]
    assert records
    assert {record["instance"] for record in records} == {"m2-diagonal"}
    assert all(record["command"] == "d2" for record in records)


def test_csv_log_appends_under_one_header(tmp_path) -> None:
    log = tmp_path / "checks.csv"
    for _ in range(2):
        result = runner.invoke(app, ["d2", "--catalog", "m2-diagonal", "--log", str(log), "--log-format", "csv"])
        assert result.exit_code == 0
    with log.open(encoding="utf-8", newline="") as handle:
        rows = list(csv.reader(handle))
    assert rows[0] == ["instance", "command", "check", "verdict", "detail", "dims", "witness"]
    assert sum(1 for row in rows if row[0] == "instance") == 1
    assert (len(rows) - 1) % 2 == 0


def test_config_file_fills_defaults(tmp_path) -> None:
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"format": "structured", "max-ambient-dim": 1000}), encoding="utf-8")
    result = runner.invoke(app, ["d2", "--catalog", "m2-diagonal", "--config", str(config)])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["command"] == "d2"


def test_config_dimension_limit_applies(tmp_path) -> None:
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"max_ambient_dim": 100}), encoding="utf-8")
    result = runner.invoke(app, ["d2", "--catalog", "s3-a3", "--config", str(config)])
    assert result.exit_code == 2


def test_bad_config_value(tmp_path) -> None:
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"format": "xml"}), encoding="utf-8")
    result = runner.invoke(app, ["d2", "--catalog", "m2-diagonal", "--config", str(config)])
    assert result.exit_code == 2


def test_merge_config_keeps_explicit_values() -> None:
    explicit = RunSettings(format=OutputFormat.STRUCTURED, run_probes=False)
    merged = merge_config(explicit, {"format": "text", "log-format": "csv", "run_probes": True, "unknown": 1})
    assert merged.format is OutputFormat.STRUCTURED
    assert merged.log_format is LogFormat.CSV
    assert merged.run_probes is False
    assert merge_config(DEFAULTS, {}) == DEFAULTS


def test_render_text_summary() -> None:
    report = Report("demo", "d2")
    report.add(CheckResult.of("first", True, A=4))
    report.add(CheckResult.of("second", False, "boom"))
    report.add(CheckResult.info("third", "", found=True))
    lines = render_text(report).splitlines()
    assert lines[0] == "📋 demo · d2"
    assert lines[1] == "✅ first  [A=4]"
    assert lines[2] == "❌ second  (boom)"
    assert lines[3].endswith("third  {found=True}")
    assert lines[-1] == "结果: 通过 1 | 失败 1 | 信息 1"


def test_report_logger_rejects_unknown_format(tmp_path) -> None:
    with pytest.raises(ValueError):
        ReportLogger(str(tmp_path / "x.log"), fmt="xml")


@pytest.mark.parametrize("unit, value", [("1/0", 1), (1, "1/0")])
def test_zero_denominator_exits_with_input_error(tmp_path, unit, value) -> None:
    path = tmp_path / "zero-denominator.json"
    payload = {"name": "bad", "algebras": {"A": {"labels": ["u"], "unit": [unit], "constants": [[0, 0, 0, value]]}}}
    path.write_text(json.dumps(payload), encoding="utf-8")
    result = runner.invoke(app, ["check-algebra", str(path)])
    assert result.exit_code == 2
    assert not isinstance(result.exception, ZeroDivisionError)


@pytest.mark.parametrize("name", catalog_names())
def test_structured_all_report_is_deterministic(name) -> None:
    args = ["all", "--catalog", name, "--format", "structured"]
    first = runner.invoke(app, args)
    second = runner.invoke(app, args)
    assert first.exit_code in (0, 1)
    assert first.exit_code == second.exit_code
    assert first.stdout == second.stdout
