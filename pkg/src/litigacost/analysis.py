"""What-if analysis on top of the core model.

Confirmation sweeps, break-even inversion of the transaction-cost share,
exhaustive enumeration of the 16 indicator combinations, and comparison of
two institutional regimes with a reform-effectiveness verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from decimal import Decimal
from enum import Enum

from .errors import InvalidRange, NoSolution, TdOverridePresent, ZeroRiskCoefficient
from .model import (
    DEFAULT_POLICY,
    DefendantAction,
    DisputeScenario,
    PlaintiffAction,
    PolicyConfig,
    RiskIndicators,
    evaluate,
    risk_coefficient,
    transaction_cost,
)
from .money import Money


@dataclass(frozen=True)
class SweepPoint:
    parameter_value: Decimal
    tc: Money
    tc_fraction: Decimal
    plaintiff_action: PlaintiffAction
    defendant_action: DefendantAction
    implausible: bool


@dataclass(frozen=True)
class SweepSeries:
    parameter_name: str
    points: tuple[SweepPoint, ...]


def sweep_confirmation(
    scenario: DisputeScenario,
    f_min: Decimal,
    f_max: Decimal,
    steps: int,
    policy: PolicyConfig = DEFAULT_POLICY,
) -> SweepSeries:
    """Evaluate the scenario on an evenly spaced confirmation grid.

    The grid includes both endpoints; only the confirmation varies, every
    other field (including a t_d_override, if set) is taken as given.
    """
    if steps < 2:
        raise InvalidRange("steps must be at least 2")
    if not (Decimal(0) <= f_min < f_max <= Decimal(1)):
        raise InvalidRange("need 0 <= f_min < f_max <= 1")

    span = f_max - f_min
    denominator = steps - 1
    points = []
    for i in range(steps):
        fraction = f_max if i == denominator else f_min + (span * i) / denominator
        ev = evaluate(scenario.with_confirmation(fraction), policy)
        points.append(
            SweepPoint(
                parameter_value=fraction,
                tc=ev.cost.tc,
                tc_fraction=ev.cost.tc_fraction_of_claim,
                plaintiff_action=ev.recommendation.plaintiff_action,
                defendant_action=ev.recommendation.defendant_action,
                implausible=ev.recommendation.implausible,
            )
        )
    return SweepSeries(parameter_name="confirmation", points=tuple(points))


def break_even_fraction(scenario: DisputeScenario, target_tc_fraction: Decimal) -> Decimal:
    """Confirmation fraction at which the cost share hits the target.

    The cost is linear in the confirmation f, TC(f) = C_fr x ((1 - f) x claim
    - trial costs), so the target share inverts in closed form to
    f* = 1 - target / C_fr - trial costs / claim. Raises NoSolution when f*
    falls outside [0, 1], ZeroRiskCoefficient when the cost is identically
    zero, and TdOverridePresent when the defendant value is pinned (the cost
    then does not depend on f at all).
    """
    coefficient = risk_coefficient(scenario.indicators)
    if coefficient == 0:
        raise ZeroRiskCoefficient("transaction cost is identically zero; no inversion")
    if scenario.t_d_override is not None:
        raise TdOverridePresent("break-even needs the defendant value derived from f")

    claim_minor = Decimal(scenario.claim.minor_units)
    trial_minor = Decimal(
        (scenario.plaintiff_trial_cost + scenario.defendant_trial_cost).minor_units
    )
    fraction = 1 - target_tc_fraction / coefficient - trial_minor / claim_minor
    if not Decimal(0) <= fraction <= Decimal(1):
        raise NoSolution(
            f"no confirmation in [0, 1] reaches a cost share of {target_tc_fraction}"
        )
    return fraction


@dataclass(frozen=True)
class IndicatorCell:
    indicators: RiskIndicators
    risk_coefficient: int
    tc: Money


def enumerate_indicator_space(scenario: DisputeScenario) -> tuple[IndicatorCell, ...]:
    """Transaction cost under every one of the 16 valid indicator combinations.

    The scenario's own indicators are ignored; rows come out in (z, kb,
    t_long, y) binary order. Doubles as the brute-force oracle for the
    risk-coefficient range and symmetry properties.
    """
    cells = []
    for combination in RiskIndicators.all_valid():
        result = transaction_cost(scenario.with_indicators(combination))
        cells.append(
            IndicatorCell(
                indicators=combination,
                risk_coefficient=result.risk_coefficient,
                tc=result.tc,
            )
        )
    return tuple(cells)


# ---------------------------------------------------------------------------
# Institutional regimes


@dataclass(frozen=True)
class RegimePreset:
    """Named institutional state expressed as an indicator assignment.

    Precautionary measures (y) are a feature of the individual case, not of
    the institutional environment, so applying a preset keeps the scenario's
    own y bit and overrides the five institutional bits.
    """

    name: str
    indicators: RiskIndicators
    description: str = ""

    def apply(self, scenario: DisputeScenario) -> DisputeScenario:
        merged = replace(self.indicators, y=scenario.indicators.y)
        return scenario.with_indicators(merged)


BUILTIN_PRESETS: tuple[RegimePreset, ...] = (
    RegimePreset(
        name="BG-pre-reform",
        indicators=RiskIndicators(z=1, kb=1, t_long=1, y=0, ka=0, t_short=0),
        description=(
            "Forensic accounting expertise unreliable and conflicted, court "
            "outcomes unpredictable, trials running over a year."
        ),
    ),
    RegimePreset(
        name="reformed",
        indicators=RiskIndicators(z=0, kb=0, t_long=0, y=0, ka=1, t_short=1),
        description=(
            "Competent and independent expertise, predictable court outcomes, "
            "trials resolved within a year."
        ),
    ),
)


def find_preset(name: str, extra: tuple[RegimePreset, ...] = ()) -> RegimePreset | None:
    """Look up a preset by name; extra presets shadow built-ins."""
    for preset in tuple(extra) + BUILTIN_PRESETS:
        if preset.name == name:
            return preset
    return None


class Verdict(str, Enum):
    REFORM_EFFECTIVE = "ReformEffective"
    REFORM_INEFFECTIVE = "ReformIneffective"


@dataclass(frozen=True)
class RegimeComparison:
    scenario_id: str
    tc_before: Money
    tc_after: Money
    delta: Money
    verdict: Verdict


def compare_regimes(
    scenario: DisputeScenario,
    before: RegimePreset,
    after: RegimePreset,
    scenario_id: str = "",
) -> RegimeComparison:
    """Transaction cost under two institutional regimes.

    A reform counts as effective only when it strictly lowers the cost; no
    change (or an increase) is ineffective.
    """
    tc_before = transaction_cost(before.apply(scenario)).tc
    tc_after = transaction_cost(after.apply(scenario)).tc
    delta = tc_after - tc_before
    verdict = (
        Verdict.REFORM_EFFECTIVE if delta.minor_units < 0 else Verdict.REFORM_INEFFECTIVE
    )
    return RegimeComparison(
        scenario_id=scenario_id,
        tc_before=tc_before,
        tc_after=tc_after,
        delta=delta,
        verdict=verdict,
    )
