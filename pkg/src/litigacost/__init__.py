"""Risk-adjusted transaction costs of trade litigation.

The package models a payment dispute between two firms, prices the risk of
the institutional environment into the cost of going to trial and recommends
whether each side should settle or litigate.
"""

from .analysis import (
    BUILTIN_PRESETS,
    IndicatorCell,
    RegimeComparison,
    RegimePreset,
    SweepPoint,
    SweepSeries,
    Verdict,
    break_even_fraction,
    compare_regimes,
    enumerate_indicator_space,
    find_preset,
    sweep_confirmation,
)
from .errors import (
    CurrencyMismatch,
    DocumentError,
    InvalidIndicators,
    InvalidRange,
    LitigacostError,
    NoSolution,
    ScenarioValidationError,
    TdOverridePresent,
    UnknownPreset,
    ValidationIssue,
    ZeroRiskCoefficient,
)
from .money import Money
from .model import (
    DEFAULT_POLICY,
    CostComponents,
    DefendantAction,
    DisputeScenario,
    Evaluation,
    PlaintiffAction,
    PolicyConfig,
    Recommendation,
    RiskIndicators,
    TransactionCostResult,
    evaluate,
    recommend,
    risk_coefficient,
    settlement_gain,
    transaction_cost,
    validate_scenario,
)

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_PRESETS",
    "CostComponents",
    "CurrencyMismatch",
    "DEFAULT_POLICY",
    "DefendantAction",
    "DisputeScenario",
    "DocumentError",
    "Evaluation",
    "IndicatorCell",
    "InvalidIndicators",
    "InvalidRange",
    "LitigacostError",
    "Money",
    "NoSolution",
    "PlaintiffAction",
    "PolicyConfig",
    "Recommendation",
    "RegimeComparison",
    "RegimePreset",
    "RiskIndicators",
    "ScenarioValidationError",
    "SweepPoint",
    "SweepSeries",
    "TdOverridePresent",
    "TransactionCostResult",
    "UnknownPreset",
    "ValidationIssue",
    "Verdict",
    "ZeroRiskCoefficient",
    "break_even_fraction",
    "compare_regimes",
    "enumerate_indicator_space",
    "evaluate",
    "find_preset",
    "recommend",
    "risk_coefficient",
    "settlement_gain",
    "sweep_confirmation",
    "transaction_cost",
    "validate_scenario",
]
