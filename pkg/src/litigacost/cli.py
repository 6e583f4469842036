"""Command-line client for the decision engine.

Thin wrapper over the core package: loads a scenario document, runs the
requested operation and renders the result. Exit codes: 0 success, 2
validation failure, 3 I/O failure. Validation failures never print partial
results to stdout; all diagnostics go to stderr.
"""

from __future__ import annotations

import json
import os
import sys
from decimal import Decimal
from pathlib import Path

import click

from .analysis import break_even_fraction, compare_regimes, find_preset, sweep_confirmation
from .docio import (
    LabeledEvaluation,
    ScenarioDocument,
    evaluate_document,
    format_fraction,
    parse_decimal,
    parse_scenario_file,
    policy_from_raw,
    render_comparison,
    render_evaluations,
    render_sweep,
)
from .errors import (
    DocumentError,
    LitigacostError,
    NoSolution,
    ScenarioValidationError,
    ValidationIssue,
)
from .model import DEFAULT_POLICY, PolicyConfig, evaluate

EXIT_VALIDATION = 2
EXIT_IO = 3

POLICY_ENV_VAR = "LITIGACOST_POLICY"

_FORMAT_OPTION = click.option(
    "--format",
    "fmt",
    type=click.Choice(["table", "csv", "json"]),
    default="table",
    show_default=True,
    help="Output format.",
)


def _print_issues(issues: list[ValidationIssue]) -> None:
    for issue in issues:
        where = " ".join(part for part in (issue.scenario_id, issue.field_path) if part)
        suffix = f" {where}" if where else ""
        click.echo(f"error [{issue.code}]{suffix}: {issue.message}", err=True)


def _fail_validation(issues: list[ValidationIssue]) -> None:
    _print_issues(issues)
    sys.exit(EXIT_VALIDATION)


def _read_file(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        click.echo(f"error [IoError] {path}: {exc}", err=True)
        sys.exit(EXIT_IO)


def _load_document(path: str) -> ScenarioDocument:
    try:
        return parse_scenario_file(_read_file(path))
    except DocumentError as exc:
        _fail_validation(exc.issues)
        raise AssertionError("unreachable")


def _load_policy(policy_path: str | None) -> PolicyConfig | None:
    """Explicit flag wins over the environment; None defers to the document."""
    path = policy_path or os.environ.get(POLICY_ENV_VAR) or None
    if path is None:
        return None
    try:
        raw = json.loads(_read_file(path).decode("utf-8"), parse_float=Decimal)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        _fail_validation([ValidationIssue("MalformedJson", f"{path}: {exc}", "policy")])
    try:
        return policy_from_raw(raw)
    except ScenarioValidationError as exc:
        _fail_validation(exc.issues)
    raise AssertionError("unreachable")


def _pick_scenario(document: ScenarioDocument, scenario_id: str):
    for item in document.scenarios:
        if item.scenario_id == scenario_id:
            return item
    _fail_validation(
        [
            ValidationIssue(
                "UnknownScenarioId",
                f"scenario id {scenario_id!r} not found in the document",
                "id",
            )
        ]
    )
    raise AssertionError("unreachable")


def _parse_fraction_arg(text: str, name: str) -> Decimal:
    try:
        return parse_decimal(text)
    except ValueError as exc:
        _fail_validation([ValidationIssue("InvalidFraction", str(exc), name)])
        raise AssertionError("unreachable")


@click.group()
@click.version_option(package_name="litigacost")
def main() -> None:
    """Risk-adjusted transaction costs of trade litigation."""


@main.command("eval")
@click.option("--scenarios", "scenarios_path", required=True, help="Scenario document (JSON).")
@_FORMAT_OPTION
@click.option("--policy", "policy_path", default=None, help="Policy file overriding document and defaults.")
def eval_command(scenarios_path: str, fmt: str, policy_path: str | None) -> None:
    """Evaluate every scenario in a document."""
    document = _load_document(scenarios_path)
    policy = _load_policy(policy_path)
    results = evaluate_document(document, policy)
    click.echo(render_evaluations(results, fmt), nl=False)


@main.command("sweep")
@click.option("--scenarios", "scenarios_path", required=True)
@click.option("--id", "scenario_id", required=True, help="Scenario to sweep.")
@click.option("--param", default="confirmation", show_default=True, help="Swept parameter.")
@click.option("--min", "f_min", required=True, help="Grid start (inclusive).")
@click.option("--max", "f_max", required=True, help="Grid end (inclusive).")
@click.option("--steps", required=True, type=int, help="Number of grid points (>= 2).")
@_FORMAT_OPTION
@click.option("--policy", "policy_path", default=None)
def sweep_command(
    scenarios_path: str,
    scenario_id: str,
    param: str,
    f_min: str,
    f_max: str,
    steps: int,
    fmt: str,
    policy_path: str | None,
) -> None:
    """Evaluate a scenario over an evenly spaced confirmation grid."""
    if param != "confirmation":
        _fail_validation(
            [ValidationIssue("InvalidRange", "only --param confirmation is supported", "param")]
        )
    document = _load_document(scenarios_path)
    item = _pick_scenario(document, scenario_id)
    policy = _load_policy(policy_path) or document.policy or DEFAULT_POLICY
    try:
        series = sweep_confirmation(
            item.scenario,
            _parse_fraction_arg(f_min, "min"),
            _parse_fraction_arg(f_max, "max"),
            steps,
            policy,
        )
    except LitigacostError as exc:
        _fail_validation([ValidationIssue(exc.code, str(exc))])
        raise AssertionError("unreachable")
    click.echo(render_sweep(series, fmt), nl=False)


@main.command("breakeven")
@click.option("--scenarios", "scenarios_path", required=True)
@click.option("--id", "scenario_id", required=True)
@click.option("--target-fraction", "target", required=True, help="Cost share of the claim to hit.")
def breakeven_command(scenarios_path: str, scenario_id: str, target: str) -> None:
    """Confirmation fraction at which the cost share reaches the target."""
    document = _load_document(scenarios_path)
    item = _pick_scenario(document, scenario_id)
    target_fraction = _parse_fraction_arg(target, "target-fraction")
    try:
        fraction = break_even_fraction(item.scenario, target_fraction)
    except NoSolution:
        click.echo("no solution: no confirmation in [0, 1] reaches the target fraction")
        return
    except LitigacostError as exc:
        _fail_validation([ValidationIssue(exc.code, str(exc))])
        raise AssertionError("unreachable")
    click.echo(format_fraction(fraction))


@main.command("compare")
@click.option("--scenarios", "scenarios_path", required=True)
@click.option("--id", "scenario_id", required=True)
@click.option("--before", "before_name", required=True, help="Regime preset before the reform.")
@click.option("--after", "after_name", required=True, help="Regime preset after the reform.")
@_FORMAT_OPTION
def compare_command(
    scenarios_path: str, scenario_id: str, before_name: str, after_name: str, fmt: str
) -> None:
    """Transaction cost under two institutional regimes, with a verdict."""
    document = _load_document(scenarios_path)
    item = _pick_scenario(document, scenario_id)
    presets = {}
    for side, name in (("before", before_name), ("after", after_name)):
        preset = find_preset(name, document.presets)
        if preset is None:
            _fail_validation(
                [ValidationIssue("UnknownPreset", f"unknown regime preset {name!r}", side)]
            )
        presets[side] = preset
    comparison = compare_regimes(
        item.scenario, presets["before"], presets["after"], scenario_id=scenario_id
    )
    click.echo(render_comparison(comparison, fmt), nl=False)


@main.command("serve")
@click.option("--listen", default="127.0.0.1:8000", show_default=True, help="host:port to bind.")
@click.option("--allow-origin", default=None, help="Origin allowed for CORS (the web UI).")
def serve_command(listen: str, allow_origin: str | None) -> None:
    """Start the HTTP service."""
    import uvicorn

    from .service import create_app

    host, _, port_text = listen.rpartition(":")
    host = host or "127.0.0.1"
    try:
        port = int(port_text)
    except ValueError:
        _fail_validation(
            [ValidationIssue("InvalidListenAddress", f"cannot parse port in {listen!r}", "listen")]
        )
        raise AssertionError("unreachable")
    uvicorn.run(create_app(allow_origin), host=host, port=port)


if __name__ == "__main__":
    main()
