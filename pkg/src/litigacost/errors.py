"""Error types and the validation-issue record shared by all surfaces."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ValidationIssue:
    """One constraint violation, addressable by field path and scenario id."""

    code: str
    message: str
    field_path: str = ""
    scenario_id: str | None = None

    def as_dict(self) -> dict:
        return {"code": self.code, "message": self.message, "field_path": self.field_path}


class LitigacostError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "Error"


class CurrencyMismatch(LitigacostError):
    code = "CurrencyMismatch"


class InvalidIndicators(LitigacostError):
    code = "InvalidIndicators"


class InvalidRange(LitigacostError):
    code = "InvalidRange"


class ZeroRiskCoefficient(LitigacostError):
    code = "ZeroRiskCoefficient"


class TdOverridePresent(LitigacostError):
    """The operation needs the defendant value derived from the confirmation
    fraction, but the scenario pins it with an explicit override."""

    code = "TdOverridePresent"


class NoSolution(LitigacostError):
    code = "NoSolution"


class UnknownPreset(LitigacostError):
    code = "UnknownPreset"


class ScenarioValidationError(LitigacostError):
    """Scenario fields violate one or more invariants; carries every violation."""

    code = "ValidationFailed"

    def __init__(self, issues: list[ValidationIssue]):
        self.issues = list(issues)
        super().__init__("; ".join(f"{i.code}: {i.message}" for i in self.issues))


class DocumentError(LitigacostError):
    """A scenario document could not be parsed or validated."""

    code = "DocumentError"

    def __init__(self, issues: list[ValidationIssue]):
        self.issues = list(issues)
        super().__init__("; ".join(f"{i.code}: {i.message}" for i in self.issues))
