"""Stateless HTTP facade over the core model and analysis operations.

Every handler calls pure functions; there is no session state and no storage.
Responses use a uniform envelope {ok, result, errors} and serialize money as
decimal strings to preserve exactness across the wire. Versioned under
/api/v1; anything else 404s with the same envelope.
"""

from __future__ import annotations

from decimal import Decimal
from typing import Any

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse
from starlette.exceptions import HTTPException as StarletteHTTPException

from ..analysis import (
    BUILTIN_PRESETS,
    RegimePreset,
    break_even_fraction,
    compare_regimes,
    find_preset,
    sweep_confirmation,
)
from ..docio import (
    comparison_to_dict,
    evaluation_to_dict,
    format_fraction,
    parse_decimal,
    policy_from_raw,
    preset_from_raw,
    preset_to_dict,
    scenario_from_raw,
    sweep_to_dict,
)
from ..errors import (
    LitigacostError,
    NoSolution,
    ScenarioValidationError,
    UnknownPreset,
    ValidationIssue,
)
from ..model import DEFAULT_POLICY, DisputeScenario, PolicyConfig, evaluate
from .schemas import (
    ApiEnvelope,
    ApiError,
    BreakEvenRequest,
    CompareRequest,
    ComparisonPayload,
    EvaluateRequest,
    EvaluationPayload,
    PresetPayload,
    RawPolicy,
    RawScenario,
    SweepPayload,
    SweepRequest,
)

_HTTP_CODES = {404: "NotFound", 405: "MethodNotAllowed"}


def _error_response(issues: list[ValidationIssue], status: int) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={
            "ok": False,
            "result": None,
            "errors": [issue.as_dict() for issue in issues],
        },
    )


def _scenario_from_request(raw: RawScenario) -> tuple[str | None, DisputeScenario]:
    data = raw.model_dump(exclude_none=True)
    scenario_id = data.pop("id", None)
    return scenario_id, scenario_from_raw(data, scenario_id)


def _policy_from_request(raw: RawPolicy | None) -> PolicyConfig:
    if raw is None:
        return DEFAULT_POLICY
    return policy_from_raw(raw.model_dump(exclude_none=True))


def _fraction_from_request(value: Any, path: str) -> Decimal:
    try:
        return parse_decimal(value)
    except ValueError as exc:
        raise ScenarioValidationError(
            [ValidationIssue("InvalidFraction", str(exc), path)]
        ) from None


def create_app(allow_origin: str | None = None) -> FastAPI:
    app = FastAPI(title="litigacost", docs_url="/api/v1/docs", openapi_url="/api/v1/openapi.json")

    if allow_origin:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=[allow_origin],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.exception_handler(ScenarioValidationError)
    async def on_validation_error(request: Request, exc: ScenarioValidationError):
        return _error_response(exc.issues, status=422)

    @app.exception_handler(LitigacostError)
    async def on_domain_error(request: Request, exc: LitigacostError):
        return _error_response([ValidationIssue(exc.code, str(exc))], status=422)

    @app.exception_handler(RequestValidationError)
    async def on_request_error(request: Request, exc: RequestValidationError):
        details = exc.errors()
        if any(detail.get("type") == "json_invalid" for detail in details):
            return _error_response(
                [ValidationIssue("MalformedJson", "request body is not valid JSON")],
                status=400,
            )
        issues = [
            ValidationIssue(
                str(detail.get("type", "invalid")),
                str(detail.get("msg", "invalid value")),
                ".".join(str(part) for part in detail.get("loc", ()) if part != "body"),
            )
            for detail in details
        ]
        return _error_response(issues, status=422)

    @app.exception_handler(StarletteHTTPException)
    async def on_http_error(request: Request, exc: StarletteHTTPException):
        code = _HTTP_CODES.get(exc.status_code, "HttpError")
        return _error_response(
            [ValidationIssue(code, str(exc.detail))], status=exc.status_code
        )

    @app.get("/healthz", response_class=PlainTextResponse)
    def healthz() -> str:
        return "ok"

    @app.post("/api/v1/evaluate", response_model=ApiEnvelope)
    def evaluate_route(body: EvaluateRequest) -> ApiEnvelope:
        scenario_id, scenario = _scenario_from_request(body.scenario)
        policy = _policy_from_request(body.policy)
        ev = evaluate(scenario, policy)
        payload = EvaluationPayload.model_validate(
            evaluation_to_dict(scenario_id, scenario, ev)
        )
        return ApiEnvelope(ok=True, result=payload)

    @app.post("/api/v1/sweep", response_model=ApiEnvelope)
    def sweep_route(body: SweepRequest) -> ApiEnvelope:
        _, scenario = _scenario_from_request(body.scenario)
        policy = _policy_from_request(body.policy)
        series = sweep_confirmation(
            scenario,
            _fraction_from_request(body.f_min, "f_min"),
            _fraction_from_request(body.f_max, "f_max"),
            body.steps,
            policy,
        )
        return ApiEnvelope(ok=True, result=SweepPayload.model_validate(sweep_to_dict(series)))

    @app.post("/api/v1/breakeven", response_model=ApiEnvelope)
    def breakeven_route(body: BreakEvenRequest):
        _, scenario = _scenario_from_request(body.scenario)
        target = _fraction_from_request(body.target_fraction, "target_fraction")
        try:
            fraction = break_even_fraction(scenario, target)
        except NoSolution as exc:
            # a well-posed question whose answer is "no such fraction"
            return _error_response([ValidationIssue(exc.code, str(exc))], status=200)
        return ApiEnvelope(ok=True, result=format_fraction(fraction))

    @app.post("/api/v1/compare", response_model=ApiEnvelope)
    def compare_route(body: CompareRequest) -> ApiEnvelope:
        scenario_id, scenario = _scenario_from_request(body.scenario)
        extra: tuple[RegimePreset, ...] = ()
        if body.presets:
            extra = tuple(
                preset_from_raw(raw.model_dump(), f"presets[{i}]")
                for i, raw in enumerate(body.presets)
            )
        chosen = {}
        for side, name in (("before", body.before), ("after", body.after)):
            preset = find_preset(name, extra)
            if preset is None:
                raise UnknownPreset(f"unknown regime preset {name!r} ({side})")
            chosen[side] = preset
        comparison = compare_regimes(
            scenario, chosen["before"], chosen["after"], scenario_id=scenario_id or ""
        )
        return ApiEnvelope(
            ok=True, result=ComparisonPayload.model_validate(comparison_to_dict(comparison))
        )

    @app.get("/api/v1/presets", response_model=ApiEnvelope)
    def presets_route() -> ApiEnvelope:
        return ApiEnvelope(
            ok=True,
            result=[PresetPayload.model_validate(preset_to_dict(p)) for p in BUILTIN_PRESETS],
        )

    return app
