"""Pydantic request and response models for the HTTP API.

Money and fraction fields accept JSON numbers or decimal strings; both arrive
as exact Decimals (numbers are parsed from their literal text, never through
binary floating point). Domain validation happens in the core package so that
error codes and field paths match the CLI; these models only pin the shape.
"""

from __future__ import annotations

from decimal import Decimal
from typing import Any

from pydantic import BaseModel, ConfigDict

MoneyValue = Decimal | str
FractionValue = Decimal | str


class RawIndicators(BaseModel):
    model_config = ConfigDict(extra="ignore")

    z: int
    kb: int
    t_long: int
    y: int
    ka: int
    t_short: int


class RawScenario(BaseModel):
    model_config = ConfigDict(extra="ignore")

    id: str | None = None
    currency: str | None = None
    claim: MoneyValue | None = None
    confirmation: FractionValue | None = None
    t_d_override: MoneyValue | None = None
    plaintiff_trial_cost: MoneyValue | None = None
    defendant_trial_cost: MoneyValue | None = None
    plaintiff_settle_cost: MoneyValue | None = None
    defendant_settle_cost: MoneyValue | None = None
    indicators: RawIndicators | None = None


class RawPolicy(BaseModel):
    model_config = ConfigDict(extra="ignore")

    plaintiff_settle_threshold: FractionValue | None = None
    defendant_settle_bound: FractionValue | None = None


class RawPreset(BaseModel):
    model_config = ConfigDict(extra="ignore")

    name: str
    description: str = ""
    indicators: RawIndicators | None = None


class EvaluateRequest(BaseModel):
    scenario: RawScenario
    policy: RawPolicy | None = None


class SweepRequest(BaseModel):
    scenario: RawScenario
    f_min: FractionValue
    f_max: FractionValue
    steps: int
    policy: RawPolicy | None = None


class BreakEvenRequest(BaseModel):
    scenario: RawScenario
    target_fraction: FractionValue


class CompareRequest(BaseModel):
    scenario: RawScenario
    before: str
    after: str
    presets: list[RawPreset] | None = None


# --- responses -------------------------------------------------------------


class ApiError(BaseModel):
    code: str
    message: str
    field_path: str = ""


class ApiEnvelope(BaseModel):
    ok: bool
    result: Any = None
    errors: list[ApiError] = []


class ComponentsPayload(BaseModel):
    t_p: str
    t_d: str
    c_tp1: str
    c_td1: str


class EvaluationPayload(BaseModel):
    id: str | None
    currency: str
    claim: str
    confirmation: str
    risk_coefficient: int
    gross_margin: str
    tc: str
    tc_fraction_of_claim: str
    components: ComponentsPayload
    settlement_gain: str
    plaintiff_action: str
    defendant_action: str
    implausible: bool
    rationale: list[str]


class SweepPointPayload(BaseModel):
    parameter_value: str
    tc: str
    tc_fraction: str
    plaintiff_action: str
    defendant_action: str
    implausible: bool


class SweepPayload(BaseModel):
    parameter_name: str
    points: list[SweepPointPayload]


class ComparisonPayload(BaseModel):
    scenario_id: str
    tc_before: str
    tc_after: str
    delta: str
    verdict: str


class IndicatorBitsPayload(BaseModel):
    z: int
    kb: int
    t_long: int
    y: int
    ka: int
    t_short: int


class PresetPayload(BaseModel):
    name: str
    description: str
    indicators: IndicatorBitsPayload
