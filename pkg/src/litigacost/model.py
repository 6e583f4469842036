"""Core decision model for enforced execution of commercial contracts.

A dispute is described by the sum claimed, the share of it the defendant
expects the court to confirm, both parties' settlement and trial costs, and
six binary institutional risk indicators. From these the model computes:

  * the settlement gain (surplus both parties share by settling before trial),
  * the risk coefficient (adverse minus favorable institutional determinants),
  * the risk-adjusted transaction cost of pushing the dispute through court,

and turns them into a settle-vs-litigate recommendation for each party.

All operations are pure functions over exact integer money; the only rounding
anywhere is the half-even rounding of the derived defendant value to whole
minor units and the 4-decimal display quantum of cost fractions.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from enum import Enum
from itertools import product
from typing import Iterator

from .errors import InvalidIndicators, ScenarioValidationError, ValidationIssue
from .money import Money

FRACTION_QUANTUM = Decimal("0.0001")


# ---------------------------------------------------------------------------
# Indicators and the risk coefficient


@dataclass(frozen=True)
class RiskIndicators:
    """Six binary determinants of the institutional risk environment.

    Adverse side: z (forensic accounting expertise likely incompetent or
    dishonest), kb (court outcomes unpredictable), t_long (trial expected to
    run over one year). Favorable side: y (preliminary precautionary measures
    in place), ka (court outcomes predictable), t_short (trial under one
    year). Each bit is 1 when the condition holds and 0 otherwise; exactly
    one of kb/ka and exactly one of t_long/t_short must be set.
    """

    z: int
    kb: int
    t_long: int
    y: int
    ka: int
    t_short: int

    def issues(self) -> list[str]:
        problems = []
        for name in ("z", "kb", "t_long", "y", "ka", "t_short"):
            if getattr(self, name) not in (0, 1):
                problems.append(f"{name} must be 0 or 1")
        if self.kb + self.ka != 1:
            problems.append("exactly one of kb/ka must be 1")
        if self.t_long + self.t_short != 1:
            problems.append("exactly one of t_long/t_short must be 1")
        return problems

    def is_valid(self) -> bool:
        return not self.issues()

    @classmethod
    def all_valid(cls) -> Iterator[RiskIndicators]:
        """The 16 valid combinations, in (z, kb, t_long, y) binary order."""
        for z, kb, t_long, y in product((0, 1), repeat=4):
            yield cls(z=z, kb=kb, t_long=t_long, y=y, ka=1 - kb, t_short=1 - t_long)


def risk_coefficient(indicators: RiskIndicators) -> int:
    """Signed count of adverse minus favorable determinants, in [-3, 3].

    Positive values mean the institutional environment works against the
    litigating parties; negative values mean it works in their favor.
    """
    problems = indicators.issues()
    if problems:
        raise InvalidIndicators("; ".join(problems))
    adverse = indicators.z + indicators.kb + indicators.t_long
    favorable = indicators.y + indicators.ka + indicators.t_short
    return adverse - favorable


# ---------------------------------------------------------------------------
# Scenario


@dataclass(frozen=True)
class DisputeScenario:
    """One commercial dispute, from the plaintiff's point of view.

    The claim doubles as the value a successful trial has to the plaintiff.
    The defendant's value is the confirmed share of the claim, rounded
    half-even to minor units, unless pinned explicitly with t_d_override.
    """

    claim: Money
    confirmation: Decimal
    plaintiff_trial_cost: Money
    defendant_trial_cost: Money
    plaintiff_settle_cost: Money
    defendant_settle_cost: Money
    indicators: RiskIndicators
    t_d_override: Money | None = None

    def plaintiff_value(self) -> Money:
        return self.claim

    def defendant_value(self) -> Money:
        if self.t_d_override is not None:
            return self.t_d_override
        with localcontext() as ctx:
            ctx.prec = 50  # keep fraction x minor-units products exact
            raw = self.confirmation * self.claim.minor_units
            minor = int(raw.to_integral_value(rounding=ROUND_HALF_EVEN))
        return Money(minor, self.claim.currency)

    def with_confirmation(self, fraction: Decimal) -> DisputeScenario:
        return replace(self, confirmation=fraction)

    def with_indicators(self, indicators: RiskIndicators) -> DisputeScenario:
        return replace(self, indicators=indicators)


_COST_FIELDS = (
    "plaintiff_trial_cost",
    "defendant_trial_cost",
    "plaintiff_settle_cost",
    "defendant_settle_cost",
)


def validate_scenario(
    claim: Money,
    confirmation: Decimal,
    plaintiff_trial_cost: Money,
    defendant_trial_cost: Money,
    plaintiff_settle_cost: Money,
    defendant_settle_cost: Money,
    indicators: RiskIndicators,
    t_d_override: Money | None = None,
    scenario_id: str | None = None,
) -> DisputeScenario:
    """Build a scenario, collecting every invariant violation before failing.

    Raises ScenarioValidationError carrying the complete list of violations;
    never stops at the first problem.
    """
    issues: list[ValidationIssue] = []

    def flag(code: str, message: str, path: str) -> None:
        issues.append(ValidationIssue(code, message, path, scenario_id))

    scenario = DisputeScenario(
        claim=claim,
        confirmation=confirmation,
        plaintiff_trial_cost=plaintiff_trial_cost,
        defendant_trial_cost=defendant_trial_cost,
        plaintiff_settle_cost=plaintiff_settle_cost,
        defendant_settle_cost=defendant_settle_cost,
        indicators=indicators,
        t_d_override=t_d_override,
    )

    if claim.minor_units <= 0:
        flag("NonPositiveClaim", "claim must be strictly positive", "claim")
    for name in _COST_FIELDS:
        cost: Money = getattr(scenario, name)
        if cost.minor_units < 0:
            flag("NegativeCost", f"{name} must not be negative", name)
        if cost.currency != claim.currency:
            flag(
                "CurrencyMismatch",
                f"{name} is {cost.currency} but the claim is {claim.currency}",
                name,
            )
    if not Decimal(0) <= confirmation <= Decimal(1):
        flag("FractionOutOfRange", "confirmation must lie in [0, 1]", "confirmation")
    for problem in indicators.issues():
        flag("InvalidIndicators", problem, "indicators")
    if t_d_override is not None:
        if t_d_override.currency != claim.currency:
            flag(
                "CurrencyMismatch",
                f"t_d_override is {t_d_override.currency} but the claim is {claim.currency}",
                "t_d_override",
            )
        elif not 0 <= t_d_override.minor_units <= claim.minor_units:
            flag(
                "TdOverrideOutOfRange",
                "t_d_override must lie between 0 and the claim",
                "t_d_override",
            )

    if issues:
        raise ScenarioValidationError(issues)
    return scenario


# ---------------------------------------------------------------------------
# Policy


@dataclass(frozen=True)
class PolicyConfig:
    """Decision thresholds.

    The plaintiff proposes settlement once the transaction cost reaches this
    share of the claim; confirmations above the defendant bound mark the
    scenario implausible, because a defendant conceding that much settles.
    """

    plaintiff_settle_threshold: Decimal = Decimal("0.25")
    defendant_settle_bound: Decimal = Decimal("0.80")


DEFAULT_POLICY = PolicyConfig()


def validate_policy(
    plaintiff_settle_threshold: Decimal | None = None,
    defendant_settle_bound: Decimal | None = None,
) -> PolicyConfig:
    """Build a policy from overrides, checking both bounds."""
    issues: list[ValidationIssue] = []
    threshold = (
        DEFAULT_POLICY.plaintiff_settle_threshold
        if plaintiff_settle_threshold is None
        else plaintiff_settle_threshold
    )
    bound = (
        DEFAULT_POLICY.defendant_settle_bound
        if defendant_settle_bound is None
        else defendant_settle_bound
    )
    if not Decimal(0) < threshold < Decimal(1):
        issues.append(
            ValidationIssue(
                "InvalidPolicy",
                "plaintiff_settle_threshold must lie in (0, 1)",
                "policy.plaintiff_settle_threshold",
            )
        )
    if not Decimal(0) < bound <= Decimal(1):
        issues.append(
            ValidationIssue(
                "InvalidPolicy",
                "defendant_settle_bound must lie in (0, 1]",
                "policy.defendant_settle_bound",
            )
        )
    if issues:
        raise ScenarioValidationError(issues)
    return PolicyConfig(threshold, bound)


# ---------------------------------------------------------------------------
# Results


@dataclass(frozen=True)
class CostComponents:
    t_p: Money
    t_d: Money
    c_tp1: Money
    c_td1: Money


@dataclass(frozen=True)
class TransactionCostResult:
    risk_coefficient: int
    gross_margin: Money
    tc: Money
    tc_fraction_of_claim: Decimal
    components: CostComponents


class PlaintiffAction(str, Enum):
    LITIGATE = "Litigate"
    PROPOSE_SETTLEMENT = "ProposeSettlement"


class DefendantAction(str, Enum):
    PROPOSE_SETTLEMENT = "ProposeSettlement"
    CONTEST = "Contest"


# Rationale codes, in the order the rules are applied.
RULE_TC_SHARE_HIGH = "tc-share-at-or-above-threshold"
RULE_TC_SHARE_LOW = "tc-share-below-threshold"
RULE_GAIN_POSITIVE = "settlement-gain-positive"
RULE_NO_GAIN = "no-settlement-gain"
RULE_IMPLAUSIBLE = "confirmation-above-defendant-bound"
RULE_FAVORABLE_ENVIRONMENT = "favorable-institutional-environment"


@dataclass(frozen=True)
class Recommendation:
    plaintiff_action: PlaintiffAction
    defendant_action: DefendantAction
    implausible: bool
    rationale: tuple[str, ...]


@dataclass(frozen=True)
class Evaluation:
    """Everything the model says about one scenario under one policy."""

    cost: TransactionCostResult
    settlement_gain: Money
    recommendation: Recommendation


# ---------------------------------------------------------------------------
# Operations


def settlement_gain(scenario: DisputeScenario) -> Money:
    """Joint surplus of settling before trial; settlement is rational when
    this is positive: (T_p - T_d) + (c_tp + c_td)."""
    t_p = scenario.plaintiff_value()
    t_d = scenario.defendant_value()
    return (t_p - t_d) + (scenario.plaintiff_settle_cost + scenario.defendant_settle_cost)


def transaction_cost(scenario: DisputeScenario) -> TransactionCostResult:
    """Risk-adjusted transaction cost of enforcing the contract in court.

    The margin between the plaintiff's and the defendant's value of a won
    trial, net of both parties' direct trial costs, scaled by the risk
    coefficient: [(T_p - T_d) - (c_tp1 + c_td1)] x risk coefficient. A
    negative result is a risk-adjusted surplus to the plaintiff in a
    favorable institutional environment; no clamping is applied.
    """
    coefficient = risk_coefficient(scenario.indicators)
    t_p = scenario.plaintiff_value()
    t_d = scenario.defendant_value()
    margin = (t_p - t_d) - (scenario.plaintiff_trial_cost + scenario.defendant_trial_cost)
    tc = margin * coefficient
    fraction = (Decimal(tc.minor_units) / Decimal(scenario.claim.minor_units)).quantize(
        FRACTION_QUANTUM, rounding=ROUND_HALF_EVEN
    )
    return TransactionCostResult(
        risk_coefficient=coefficient,
        gross_margin=margin,
        tc=tc,
        tc_fraction_of_claim=fraction,
        components=CostComponents(
            t_p=t_p,
            t_d=t_d,
            c_tp1=scenario.plaintiff_trial_cost,
            c_td1=scenario.defendant_trial_cost,
        ),
    )


def evaluate(scenario: DisputeScenario, policy: PolicyConfig = DEFAULT_POLICY) -> Evaluation:
    """Compute cost, settlement gain and the recommendation in one pass."""
    cost = transaction_cost(scenario)
    gain = settlement_gain(scenario)
    rationale: list[str] = []

    if cost.tc_fraction_of_claim >= policy.plaintiff_settle_threshold:
        plaintiff = PlaintiffAction.PROPOSE_SETTLEMENT
        rationale.append(RULE_TC_SHARE_HIGH)
    else:
        plaintiff = PlaintiffAction.LITIGATE
        rationale.append(RULE_TC_SHARE_LOW)

    if gain.minor_units > 0:
        defendant = DefendantAction.PROPOSE_SETTLEMENT
        rationale.append(RULE_GAIN_POSITIVE)
    else:
        defendant = DefendantAction.CONTEST
        rationale.append(RULE_NO_GAIN)

    implausible = scenario.confirmation > policy.defendant_settle_bound
    if implausible:
        rationale.append(RULE_IMPLAUSIBLE)
    if cost.tc.minor_units < 0:
        rationale.append(RULE_FAVORABLE_ENVIRONMENT)

    recommendation = Recommendation(
        plaintiff_action=plaintiff,
        defendant_action=defendant,
        implausible=implausible,
        rationale=tuple(rationale),
    )
    return Evaluation(cost=cost, settlement_gain=gain, recommendation=recommendation)


def recommend(scenario: DisputeScenario, policy: PolicyConfig = DEFAULT_POLICY) -> Recommendation:
    """Predicted rational action for each party, with the rules that fired."""
    return evaluate(scenario, policy).recommendation
