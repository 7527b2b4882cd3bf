"""Command-line interface for verifying depth-two extensions, Hopf algebroids and weak Hopf-Galois extensions."""

from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass, fields, replace
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Optional

import typer

from catalog import CATALOG, catalog_document, load_catalog
from check_types import InstanceError, Report, StructureError, SuiteOptions, Verdict, WitnessError
from instance_file import InstanceFile, load_document, parse_instance
from logger import ReportLogger
from suite import PRECONDITION_ERRORS, Command, run_command

LOG_LEVEL_ENV = "HOPFD2_LOG_LEVEL"

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2

INPUT_ERRORS = (InstanceError, StructureError, WitnessError) + PRECONDITION_ERRORS

app = typer.Typer(
    help="Exact verification of depth-two extensions, bialgebroids, Hopf algebroids and weak Hopf-Galois extensions.",
    add_completion=False,
    no_args_is_help=True,
)


class OutputFormat(str, Enum):
    TEXT = "text"
    STRUCTURED = "structured"


class LogFormat(str, Enum):
    JSONL = "jsonl"
    CSV = "csv"


@dataclass(frozen=True)
class RunSettings:
    format: OutputFormat = OutputFormat.TEXT
    log: Optional[str] = None
    log_format: LogFormat = LogFormat.JSONL
    run_probes: bool = True
    check_factorization: bool = True
    max_ambient_dim: int = 4096

    def options(self) -> SuiteOptions:
        return SuiteOptions(self.run_probes, self.check_factorization, self.max_ambient_dim)


DEFAULTS = RunSettings()

COMMAND_HELP: Dict[Command, str] = {
    Command.CHECK_ALGEBRA: "Validate the algebras and, when present, the (weak) Hopf structure.",
    Command.D2: "Search for left and right depth-two quasibases; balancedness and A^S.",
    Command.BIALGEBROID: "Build S and T, their pairings, coactions and the Galois property of End(_B A).",
    Command.HOPF_ALGEBROID: "Symmetric separability element, the antipode τ and the Hopf algebroid axioms of T^op_cop.",
    Command.WEAK_HOPF: "Weak bialgebra, antipode and projection identities; integrals and the dual.",
    Command.GALOIS: "The maps β, β', η, η̄ and their identities; dual bases from an integral; probes.",
    Command.NORMALITY: "Normality of a Hopf subalgebra against bijectivity of the Hopf-Galois map.",
    Command.RECONSTRUCT: "Rebuild the antipode from the inverse Galois map.",
    Command.ALL: "Every applicable suite.",
}


def merge_config(settings: RunSettings, config: Dict[str, Any]) -> RunSettings:
    """Fill settings still at their defaults from a config mapping."""

    updates: Dict[str, Any] = {}
    for spec in fields(RunSettings):
        key = spec.name
        if key not in config and key.replace("_", "-") not in config:
            continue
        value = config.get(key, config.get(key.replace("_", "-")))
        if getattr(settings, key) == getattr(DEFAULTS, key):
            if key == "format":
                value = OutputFormat(value)
            elif key == "log_format":
                value = LogFormat(value)
            updates[key] = value
    return replace(settings, **updates)


def render_text(report: Report) -> str:
    lines = [f"📋 {report.instance} · {report.command}"]
    for check in report.checks:
        if check.verdict is Verdict.INFO:
            marker = "ℹ️ "
        else:
            marker = "✅" if check.verdict is Verdict.PASS else "❌"
        line = f"{marker} {check.name}"
        if check.dims:
            line += "  [" + ", ".join(f"{k}={v}" for k, v in check.dims.items()) + "]"
        if check.witness:
            line += "  {" + ", ".join(f"{k}={v}" for k, v in check.witness.items()) + "}"
        if check.detail:
            line += f"  ({check.detail})"
        lines.append(line)
    failed = len(report.failures)
    passed = sum(1 for check in report.checks if check.verdict is Verdict.PASS)
    lines.append(f"结果: 通过 {passed} | 失败 {failed} | 信息 {len(report.checks) - passed - failed}")
    return "\n".join(lines)


def render_structured(report: Report) -> str:
    return json.dumps(report.to_dict(), ensure_ascii=False, indent=2, sort_keys=True, default=str)


def _load(file: Optional[Path], catalog: Optional[str]) -> InstanceFile:
    if (file is None) == (catalog is None):
        raise InstanceError("give exactly one of FILE or --catalog")
    if catalog is not None:
        return load_catalog(catalog)
    return parse_instance(file)  # type: ignore[arg-type]


def execute(command: Command, file: Optional[Path], catalog: Optional[str], settings: RunSettings) -> int:
    """Run a command and print its report; returns the exit code."""

    try:
        instance = _load(file, catalog)
        report = run_command(command, instance, settings.options())
    except INPUT_ERRORS as exc:
        typer.echo(f"❌ {type(exc).__name__}: {exc}", err=True)
        return EXIT_INPUT_ERROR
    if settings.log:
        with ReportLogger(settings.log, fmt=settings.log_format.value) as report_logger:
            report_logger.log(report)
    if settings.format is OutputFormat.STRUCTURED:
        typer.echo(render_structured(report))
    else:
        typer.echo(render_text(report))
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _register(command: Command) -> None:
    def handler(
        file: Optional[Path] = typer.Argument(None, help="Instance file (JSON or YAML)."),
        catalog: Optional[str] = typer.Option(None, "--catalog", help="Built-in instance name."),
        fmt: OutputFormat = typer.Option(DEFAULTS.format, "--format", help="Report format."),
        log: Optional[str] = typer.Option(None, "--log", help="Append check records to this file."),
        log_format: LogFormat = typer.Option(DEFAULTS.log_format, "--log-format", help="Record format."),
        config: Optional[Path] = typer.Option(None, "--config", help="JSON or YAML defaults."),
        probes: bool = typer.Option(DEFAULTS.run_probes, "--probes/--no-probes", help="Run the informational probes."),
        factorization: bool = typer.Option(
            DEFAULTS.check_factorization, "--factorization/--no-factorization", help="Check the endomorphism factorization."
        ),
        max_ambient_dim: int = typer.Option(DEFAULTS.max_ambient_dim, "--max-ambient-dim", min=1),
    ) -> None:
        settings = RunSettings(fmt, log, log_format, probes, factorization, max_ambient_dim)
        if config is not None:
            try:
                settings = merge_config(settings, load_document(config))
            except (InstanceError, ValueError) as exc:
                typer.echo(f"❌ config: {exc}", err=True)
                raise typer.Exit(EXIT_INPUT_ERROR)
        raise typer.Exit(execute(command, file, catalog, settings))

    handler.__doc__ = COMMAND_HELP[command]
    app.command(command.value)(handler)


for _command in Command:
    _register(_command)


@app.command("catalog")
def list_catalog() -> None:
    """List the built-in instances."""

    typer.echo("✅ 内置实例:")
    for name in CATALOG:
        typer.echo(f"  - {name}: {catalog_document(name).get('description', '')}")


@app.callback()
def configure_logging() -> None:
    level = os.environ.get(LOG_LEVEL_ENV, "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), format="%(levelname)s %(name)s: %(message)s")


def main() -> None:
    app()


if __name__ == "__main__":
    main()
