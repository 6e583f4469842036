"""Scenario documents and result rendering.

The on-disk format is a JSON document with an explicit schema_version, a list
of named scenarios, and optional policy overrides and regime presets. Money
travels as decimal strings in major units ("100000.00") and is converted
exactly to integer minor units; anything finer than two decimal places is
rejected. All validation problems in a document are collected and reported
together, never one at a time.

The same ingestion and serialization functions back both the CLI and the
HTTP service, which keeps their outputs numerically identical.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation, ROUND_HALF_EVEN
from typing import Any, Mapping, Sequence

from .analysis import RegimeComparison, RegimePreset, SweepSeries
from .errors import DocumentError, ScenarioValidationError, ValidationIssue
from .model import (
    DEFAULT_POLICY,
    DisputeScenario,
    Evaluation,
    PolicyConfig,
    RiskIndicators,
    evaluate,
    validate_policy,
    validate_scenario,
)
from .money import Money

SCHEMA_VERSION = 1

INDICATOR_KEYS = ("z", "kb", "t_long", "y", "ka", "t_short")
_AMOUNT_FIELDS = (
    "claim",
    "plaintiff_trial_cost",
    "defendant_trial_cost",
    "plaintiff_settle_cost",
    "defendant_settle_cost",
)


@dataclass(frozen=True)
class LabeledScenario:
    scenario_id: str
    scenario: DisputeScenario


@dataclass(frozen=True)
class ScenarioDocument:
    schema_version: int
    scenarios: tuple[LabeledScenario, ...]
    policy: PolicyConfig | None = None
    presets: tuple[RegimePreset, ...] = ()


@dataclass(frozen=True)
class LabeledEvaluation:
    scenario_id: str
    scenario: DisputeScenario
    evaluation: Evaluation


# ---------------------------------------------------------------------------
# Value-level parsing


def parse_decimal(value: Any) -> Decimal:
    """Exact Decimal from a JSON-ish value; floats go through their shortest
    decimal representation."""
    if isinstance(value, bool):
        raise ValueError("expected a number, got a boolean")
    if isinstance(value, Decimal):
        return value
    if isinstance(value, int):
        return Decimal(value)
    if isinstance(value, float):
        value = str(value)
    if isinstance(value, str):
        try:
            dec = Decimal(value.strip())
        except InvalidOperation:
            raise ValueError(f"not a decimal number: {value!r}") from None
        if not dec.is_finite():
            raise ValueError(f"not a finite number: {value!r}")
        return dec
    raise ValueError(f"expected a number, got {type(value).__name__}")


def _parse_bit(value: Any) -> int:
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, int) and value in (0, 1):
        return value
    raise ValueError("must be 0 or 1")


def indicators_from_raw(
    raw: Any, path: str = "indicators", scenario_id: str | None = None
) -> tuple[RiskIndicators | None, list[ValidationIssue]]:
    issues: list[ValidationIssue] = []
    if not isinstance(raw, Mapping):
        return None, [
            ValidationIssue(
                "InvalidIndicators", "indicators must be an object", path, scenario_id
            )
        ]
    bits: dict[str, int] = {}
    for key in INDICATOR_KEYS:
        if key not in raw:
            issues.append(
                ValidationIssue(
                    "InvalidIndicators", f"missing indicator bit {key}", path, scenario_id
                )
            )
            continue
        try:
            bits[key] = _parse_bit(raw[key])
        except ValueError as exc:
            issues.append(
                ValidationIssue(
                    "InvalidIndicators", f"{key} {exc}", f"{path}.{key}", scenario_id
                )
            )
    if issues:
        return None, issues
    return RiskIndicators(**bits), []


def scenario_from_raw(
    raw: Mapping[str, Any], scenario_id: str | None = None
) -> DisputeScenario:
    """Build and validate a scenario from raw JSON-ish fields.

    Shape problems (missing fields, unparseable amounts) and invariant
    violations both surface as a ScenarioValidationError carrying the full
    issue list.
    """
    issues: list[ValidationIssue] = []

    currency = raw.get("currency")
    if currency is None:
        issues.append(
            ValidationIssue("MissingField", "currency is required", "currency", scenario_id)
        )
    elif not (isinstance(currency, str) and len(currency) == 3 and currency.isalpha() and currency.isupper()):
        issues.append(
            ValidationIssue(
                "InvalidCurrency",
                "currency must be a 3-letter uppercase code",
                "currency",
                scenario_id,
            )
        )
        currency = None

    amounts: dict[str, Money] = {}
    for field in _AMOUNT_FIELDS:
        if field not in raw:
            issues.append(
                ValidationIssue("MissingField", f"{field} is required", field, scenario_id)
            )
            continue
        try:
            amounts[field] = Money.parse(raw[field], currency or "???")
        except ValueError as exc:
            issues.append(ValidationIssue("InvalidAmount", str(exc), field, scenario_id))

    confirmation: Decimal | None = None
    if "confirmation" not in raw:
        issues.append(
            ValidationIssue(
                "MissingField", "confirmation is required", "confirmation", scenario_id
            )
        )
    else:
        try:
            confirmation = parse_decimal(raw["confirmation"])
        except ValueError as exc:
            issues.append(
                ValidationIssue("InvalidFraction", str(exc), "confirmation", scenario_id)
            )

    override: Money | None = None
    if raw.get("t_d_override") is not None:
        try:
            override = Money.parse(raw["t_d_override"], currency or "???")
        except ValueError as exc:
            issues.append(
                ValidationIssue("InvalidAmount", str(exc), "t_d_override", scenario_id)
            )

    indicators: RiskIndicators | None = None
    if "indicators" not in raw:
        issues.append(
            ValidationIssue(
                "MissingField", "indicators is required", "indicators", scenario_id
            )
        )
    else:
        indicators, indicator_issues = indicators_from_raw(
            raw["indicators"], "indicators", scenario_id
        )
        issues.extend(indicator_issues)

    if issues:
        raise ScenarioValidationError(issues)

    assert confirmation is not None and indicators is not None
    return validate_scenario(
        claim=amounts["claim"],
        confirmation=confirmation,
        plaintiff_trial_cost=amounts["plaintiff_trial_cost"],
        defendant_trial_cost=amounts["defendant_trial_cost"],
        plaintiff_settle_cost=amounts["plaintiff_settle_cost"],
        defendant_settle_cost=amounts["defendant_settle_cost"],
        indicators=indicators,
        t_d_override=override,
        scenario_id=scenario_id,
    )


def policy_from_raw(raw: Any, path: str = "policy") -> PolicyConfig:
    if not isinstance(raw, Mapping):
        raise ScenarioValidationError(
            [ValidationIssue("InvalidPolicy", "policy must be an object", path)]
        )
    values: dict[str, Decimal | None] = {}
    issues: list[ValidationIssue] = []
    for key in ("plaintiff_settle_threshold", "defendant_settle_bound"):
        if raw.get(key) is None:
            values[key] = None
            continue
        try:
            values[key] = parse_decimal(raw[key])
        except ValueError as exc:
            issues.append(ValidationIssue("InvalidPolicy", str(exc), f"{path}.{key}"))
    if issues:
        raise ScenarioValidationError(issues)
    return validate_policy(**values)


def preset_from_raw(raw: Any, path: str) -> RegimePreset:
    issues: list[ValidationIssue] = []
    if not isinstance(raw, Mapping):
        raise ScenarioValidationError(
            [ValidationIssue("InvalidPreset", "preset must be an object", path)]
        )
    name = raw.get("name")
    if not isinstance(name, str) or not name:
        issues.append(
            ValidationIssue("InvalidPreset", "preset name is required", f"{path}.name")
        )
    indicators, indicator_issues = indicators_from_raw(
        raw.get("indicators"), f"{path}.indicators"
    )
    issues.extend(indicator_issues)
    if indicators is not None:
        for problem in indicators.issues():
            issues.append(
                ValidationIssue("InvalidIndicators", problem, f"{path}.indicators")
            )
    if issues:
        raise ScenarioValidationError(issues)
    assert isinstance(name, str) and indicators is not None
    return RegimePreset(
        name=name, indicators=indicators, description=str(raw.get("description", ""))
    )


# ---------------------------------------------------------------------------
# Document parsing


def parse_scenario_file(data: bytes | str) -> ScenarioDocument:
    """Parse and validate a scenario document; collects every problem."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DocumentError(
                [ValidationIssue("MalformedJson", f"not UTF-8 text: {exc}")]
            ) from None
    try:
        root = json.loads(data, parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise DocumentError([ValidationIssue("MalformedJson", str(exc))]) from None

    if not isinstance(root, dict):
        raise DocumentError(
            [ValidationIssue("MalformedJson", "top level must be a JSON object")]
        )

    issues: list[ValidationIssue] = []
    version = root.get("schema_version")
    if version != SCHEMA_VERSION:
        raise DocumentError(
            [
                ValidationIssue(
                    "UnknownSchemaVersion",
                    f"schema_version must be {SCHEMA_VERSION}, got {version!r}",
                    "schema_version",
                )
            ]
        )

    raw_scenarios = root.get("scenarios")
    if raw_scenarios is None:
        issues.append(ValidationIssue("MissingField", "scenarios is required", "scenarios"))
        raw_scenarios = []
    elif not isinstance(raw_scenarios, list):
        issues.append(
            ValidationIssue("InvalidField", "scenarios must be a list", "scenarios")
        )
        raw_scenarios = []

    scenarios: list[LabeledScenario] = []
    seen_ids: set[str] = set()
    for index, raw in enumerate(raw_scenarios):
        place = f"scenarios[{index}]"
        if not isinstance(raw, Mapping):
            issues.append(
                ValidationIssue("InvalidField", "scenario must be an object", place)
            )
            continue
        scenario_id = raw.get("id")
        if not isinstance(scenario_id, str) or not scenario_id:
            issues.append(
                ValidationIssue("MissingField", "scenario id is required", f"{place}.id")
            )
            continue
        if scenario_id in seen_ids:
            issues.append(
                ValidationIssue(
                    "DuplicateScenarioId",
                    f"scenario id {scenario_id!r} appears more than once",
                    f"{place}.id",
                    scenario_id,
                )
            )
            continue
        seen_ids.add(scenario_id)
        try:
            scenarios.append(LabeledScenario(scenario_id, scenario_from_raw(raw, scenario_id)))
        except ScenarioValidationError as exc:
            issues.extend(exc.issues)

    policy: PolicyConfig | None = None
    if root.get("policy") is not None:
        try:
            policy = policy_from_raw(root["policy"])
        except ScenarioValidationError as exc:
            issues.extend(exc.issues)

    presets: list[RegimePreset] = []
    raw_presets = root.get("presets")
    if raw_presets is not None:
        if not isinstance(raw_presets, list):
            issues.append(
                ValidationIssue("InvalidField", "presets must be a list", "presets")
            )
        else:
            seen_names: set[str] = set()
            for index, raw in enumerate(raw_presets):
                place = f"presets[{index}]"
                try:
                    preset = preset_from_raw(raw, place)
                except ScenarioValidationError as exc:
                    issues.extend(exc.issues)
                    continue
                if preset.name in seen_names:
                    issues.append(
                        ValidationIssue(
                            "DuplicatePresetName",
                            f"preset name {preset.name!r} appears more than once",
                            f"{place}.name",
                        )
                    )
                    continue
                seen_names.add(preset.name)
                presets.append(preset)

    if issues:
        raise DocumentError(issues)
    return ScenarioDocument(
        schema_version=SCHEMA_VERSION,
        scenarios=tuple(scenarios),
        policy=policy,
        presets=tuple(presets),
    )


def evaluate_document(
    document: ScenarioDocument, policy: PolicyConfig | None = None
) -> list[LabeledEvaluation]:
    """Evaluate every scenario in input order under one policy.

    An explicitly passed policy wins over the document's own; with neither,
    the defaults apply.
    """
    chosen = policy or document.policy or DEFAULT_POLICY
    return [
        LabeledEvaluation(item.scenario_id, item.scenario, evaluate(item.scenario, chosen))
        for item in document.scenarios
    ]


# ---------------------------------------------------------------------------
# Serialization


def format_money(amount: Money) -> str:
    return str(amount)


def format_fraction(value: Decimal) -> str:
    return str(value.quantize(Decimal("0.0001"), rounding=ROUND_HALF_EVEN))


def indicators_to_dict(indicators: RiskIndicators) -> dict[str, int]:
    return {key: getattr(indicators, key) for key in INDICATOR_KEYS}


def scenario_to_dict(scenario_id: str, scenario: DisputeScenario) -> dict[str, Any]:
    out: dict[str, Any] = {
        "id": scenario_id,
        "currency": scenario.claim.currency,
        "claim": format_money(scenario.claim),
        "confirmation": str(scenario.confirmation),
    }
    if scenario.t_d_override is not None:
        out["t_d_override"] = format_money(scenario.t_d_override)
    out.update(
        {
            "plaintiff_trial_cost": format_money(scenario.plaintiff_trial_cost),
            "defendant_trial_cost": format_money(scenario.defendant_trial_cost),
            "plaintiff_settle_cost": format_money(scenario.plaintiff_settle_cost),
            "defendant_settle_cost": format_money(scenario.defendant_settle_cost),
            "indicators": indicators_to_dict(scenario.indicators),
        }
    )
    return out


def policy_to_dict(policy: PolicyConfig) -> dict[str, str]:
    return {
        "plaintiff_settle_threshold": str(policy.plaintiff_settle_threshold),
        "defendant_settle_bound": str(policy.defendant_settle_bound),
    }


def preset_to_dict(preset: RegimePreset) -> dict[str, Any]:
    return {
        "name": preset.name,
        "description": preset.description,
        "indicators": indicators_to_dict(preset.indicators),
    }


def document_to_dict(document: ScenarioDocument) -> dict[str, Any]:
    out: dict[str, Any] = {
        "schema_version": document.schema_version,
        "scenarios": [
            scenario_to_dict(item.scenario_id, item.scenario) for item in document.scenarios
        ],
    }
    if document.policy is not None:
        out["policy"] = policy_to_dict(document.policy)
    if document.presets:
        out["presets"] = [preset_to_dict(p) for p in document.presets]
    return out


def document_to_json(document: ScenarioDocument) -> str:
    return json.dumps(document_to_dict(document), indent=2) + "\n"


def evaluation_to_dict(
    scenario_id: str | None, scenario: DisputeScenario, ev: Evaluation
) -> dict[str, Any]:
    cost = ev.cost
    rec = ev.recommendation
    return {
        "id": scenario_id,
        "currency": scenario.claim.currency,
        "claim": format_money(scenario.claim),
        "confirmation": format_fraction(scenario.confirmation),
        "risk_coefficient": cost.risk_coefficient,
        "gross_margin": format_money(cost.gross_margin),
        "tc": format_money(cost.tc),
        "tc_fraction_of_claim": format_fraction(cost.tc_fraction_of_claim),
        "components": {
            "t_p": format_money(cost.components.t_p),
            "t_d": format_money(cost.components.t_d),
            "c_tp1": format_money(cost.components.c_tp1),
            "c_td1": format_money(cost.components.c_td1),
        },
        "settlement_gain": format_money(ev.settlement_gain),
        "plaintiff_action": rec.plaintiff_action.value,
        "defendant_action": rec.defendant_action.value,
        "implausible": rec.implausible,
        "rationale": list(rec.rationale),
    }


def sweep_to_dict(series: SweepSeries) -> dict[str, Any]:
    return {
        "parameter_name": series.parameter_name,
        "points": [
            {
                "parameter_value": format_fraction(point.parameter_value),
                "tc": format_money(point.tc),
                "tc_fraction": format_fraction(point.tc_fraction),
                "plaintiff_action": point.plaintiff_action.value,
                "defendant_action": point.defendant_action.value,
                "implausible": point.implausible,
            }
            for point in series.points
        ],
    }


def comparison_to_dict(comparison: RegimeComparison) -> dict[str, Any]:
    return {
        "scenario_id": comparison.scenario_id,
        "tc_before": format_money(comparison.tc_before),
        "tc_after": format_money(comparison.tc_after),
        "delta": format_money(comparison.delta),
        "verdict": comparison.verdict.value,
    }


# ---------------------------------------------------------------------------
# Rendering

EVAL_CSV_COLUMNS = (
    "id",
    "currency",
    "claim",
    "confirmation",
    "c_fr",
    "tc",
    "tc_fraction",
    "plaintiff_action",
    "defendant_action",
    "implausible",
)


def _bool_text(value: bool) -> str:
    return "true" if value else "false"


def _eval_row(item: LabeledEvaluation) -> list[str]:
    ev = item.evaluation
    return [
        item.scenario_id,
        item.scenario.claim.currency,
        format_money(item.scenario.claim),
        format_fraction(item.scenario.confirmation),
        str(ev.cost.risk_coefficient),
        format_money(ev.cost.tc),
        format_fraction(ev.cost.tc_fraction_of_claim),
        ev.recommendation.plaintiff_action.value,
        ev.recommendation.defendant_action.value,
        _bool_text(ev.recommendation.implausible),
    ]


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _table_text(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    lines = [
        "  ".join(cell.ljust(width) for cell, width in zip(cells, widths)).rstrip()
        for cells in [list(header), *rows]
    ]
    return "\n".join(lines) + "\n"


def render_evaluations(items: Sequence[LabeledEvaluation], fmt: str = "table") -> str:
    rows = [_eval_row(item) for item in items]
    if fmt == "csv":
        return _csv_text(EVAL_CSV_COLUMNS, rows)
    if fmt == "json":
        payload = {
            "results": [
                evaluation_to_dict(item.scenario_id, item.scenario, item.evaluation)
                for item in items
            ]
        }
        return json.dumps(payload, indent=2) + "\n"
    return _table_text(EVAL_CSV_COLUMNS, rows)


SWEEP_CSV_COLUMNS = (
    "parameter",
    "parameter_value",
    "tc",
    "tc_fraction",
    "plaintiff_action",
    "defendant_action",
    "implausible",
)


def render_sweep(series: SweepSeries, fmt: str = "table") -> str:
    rows = [
        [
            series.parameter_name,
            format_fraction(point.parameter_value),
            format_money(point.tc),
            format_fraction(point.tc_fraction),
            point.plaintiff_action.value,
            point.defendant_action.value,
            _bool_text(point.implausible),
        ]
        for point in series.points
    ]
    if fmt == "csv":
        return _csv_text(SWEEP_CSV_COLUMNS, rows)
    if fmt == "json":
        return json.dumps(sweep_to_dict(series), indent=2) + "\n"
    return _table_text(SWEEP_CSV_COLUMNS, rows)


COMPARE_CSV_COLUMNS = ("scenario_id", "tc_before", "tc_after", "delta", "verdict")


def render_comparison(comparison: RegimeComparison, fmt: str = "table") -> str:
    row = [
        comparison.scenario_id,
        format_money(comparison.tc_before),
        format_money(comparison.tc_after),
        format_money(comparison.delta),
        comparison.verdict.value,
    ]
    if fmt == "csv":
        return _csv_text(COMPARE_CSV_COLUMNS, [row])
    if fmt == "json":
        return json.dumps(comparison_to_dict(comparison), indent=2) + "\n"
    return _table_text(COMPARE_CSV_COLUMNS, [row])


def render_results(result: Any, fmt: str = "table") -> str:
    """Render evaluations, a sweep series or a regime comparison as
    table, csv or json text."""
    if isinstance(result, SweepSeries):
        return render_sweep(result, fmt)
    if isinstance(result, RegimeComparison):
        return render_comparison(result, fmt)
    if isinstance(result, Sequence) and all(
        isinstance(item, LabeledEvaluation) for item in result
    ):
        return render_evaluations(result, fmt)
    raise TypeError(f"cannot render {type(result).__name__}")
