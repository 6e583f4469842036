"""Shared builders for the canonical hypothetical dispute.

The running example everywhere: a 100 000.00 EUR claim, 9 000.00 trial and
settlement costs on each side, and the indicator assignment z=1, kb=1,
t_long=1, y=1, ka=0, t_short=0 (risk coefficient 2). At confirmation 0.8 the
transaction cost is 4 000.00 (4% of the claim); at 0.5 it is 64 000.00 (64%).
"""

from __future__ import annotations

import json
from decimal import Decimal

import pytest

from litigacost.model import DisputeScenario, RiskIndicators
from litigacost.money import Money

HYPOTHESIS_INDICATORS = RiskIndicators(z=1, kb=1, t_long=1, y=1, ka=0, t_short=0)


def money(text: str, currency: str = "EUR") -> Money:
    return Money.parse(text, currency)


def hypothesis_scenario(confirmation: str = "0.8", **overrides) -> DisputeScenario:
    fields = dict(
        claim=money("100000.00"),
        confirmation=Decimal(confirmation),
        plaintiff_trial_cost=money("9000.00"),
        defendant_trial_cost=money("9000.00"),
        plaintiff_settle_cost=money("9000.00"),
        defendant_settle_cost=money("9000.00"),
        indicators=HYPOTHESIS_INDICATORS,
    )
    fields.update(overrides)
    return DisputeScenario(**fields)


def raw_hypothesis_scenario(scenario_id: str = "hyp-1", confirmation: str = "0.8", **overrides) -> dict:
    raw = {
        "id": scenario_id,
        "currency": "EUR",
        "claim": "100000.00",
        "confirmation": confirmation,
        "plaintiff_trial_cost": "9000.00",
        "defendant_trial_cost": "9000.00",
        "plaintiff_settle_cost": "9000.00",
        "defendant_settle_cost": "9000.00",
        "indicators": {"z": 1, "kb": 1, "t_long": 1, "y": 1, "ka": 0, "t_short": 0},
    }
    raw.update(overrides)
    return raw


def document_dict(*scenarios: dict, **extra) -> dict:
    doc = {"schema_version": 1, "scenarios": list(scenarios)}
    doc.update(extra)
    return doc


def document_text(*scenarios: dict, **extra) -> str:
    return json.dumps(document_dict(*scenarios, **extra))


@pytest.fixture
def hyp1() -> DisputeScenario:
    return hypothesis_scenario("0.8")


@pytest.fixture
def hyp2() -> DisputeScenario:
    return hypothesis_scenario("0.5")


@pytest.fixture
def scenario_file(tmp_path):
    """Write a document holding the given raw scenarios; returns the path."""

    def write(*scenarios: dict, name: str = "scenarios.json", **extra) -> str:
        if not scenarios:
            scenarios = (
                raw_hypothesis_scenario("hyp-1", "0.8"),
                raw_hypothesis_scenario("hyp-2", "0.5"),
            )
        path = tmp_path / name
        path.write_text(document_text(*scenarios, **extra))
        return str(path)

    return write
