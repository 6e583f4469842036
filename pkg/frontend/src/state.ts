/*
 * Form state and its mapping onto the wire scenario.
 *
 * The kb/ka and t_long/t_short indicator pairs are modeled as single
 * two-state switches, so a state where both (or neither) side of a pair is
 * set cannot be expressed at all. The confirmation slider lives in percent
 * with 0.1% resolution and is converted to a fraction string by integer
 * arithmetic, never through binary floating point.
 */

import type { RawPolicy, RawScenario, WireIndicators } from "./types.js";

export type CourtSwitch = "unpredictable" | "predictable";
export type DurationSwitch = "over-a-year" | "under-a-year";

export interface IndicatorPairs {
  z: 0 | 1;
  y: 0 | 1;
  court: CourtSwitch;
  duration: DurationSwitch;
}

export interface ScenarioForm {
  currency: string;
  claim: string;
  confirmationPct: number;
  plaintiffTrialCost: string;
  defendantTrialCost: string;
  plaintiffSettleCost: string;
  defendantSettleCost: string;
  indicators: IndicatorPairs;
  settleThreshold: string;
}

export function defaultForm(): ScenarioForm {
  return {
    currency: "EUR",
    claim: "100000.00",
    confirmationPct: 80,
    plaintiffTrialCost: "9000.00",
    defendantTrialCost: "9000.00",
    plaintiffSettleCost: "9000.00",
    defendantSettleCost: "9000.00",
    indicators: { z: 1, y: 1, court: "unpredictable", duration: "over-a-year" },
    settleThreshold: "",
  };
}

export function toWireIndicators(pairs: IndicatorPairs): WireIndicators {
  return {
    z: pairs.z,
    y: pairs.y,
    kb: pairs.court === "unpredictable" ? 1 : 0,
    ka: pairs.court === "unpredictable" ? 0 : 1,
    t_long: pairs.duration === "over-a-year" ? 1 : 0,
    t_short: pairs.duration === "over-a-year" ? 0 : 1,
  };
}

/** Percent (0..100, 0.1 steps) to a 4-decimal fraction string. */
export function confirmationFraction(pct: number): string {
  const tenths = Math.min(1000, Math.max(0, Math.round(pct * 10)));
  if (tenths === 1000) return "1.0000";
  return `0.${String(tenths).padStart(3, "0")}0`;
}

export function toRawScenario(form: ScenarioForm): RawScenario {
  return {
    id: "what-if",
    currency: form.currency.trim().toUpperCase(),
    claim: form.claim.trim(),
    confirmation: confirmationFraction(form.confirmationPct),
    plaintiff_trial_cost: form.plaintiffTrialCost.trim(),
    defendant_trial_cost: form.defendantTrialCost.trim(),
    plaintiff_settle_cost: form.plaintiffSettleCost.trim(),
    defendant_settle_cost: form.defendantSettleCost.trim(),
    indicators: toWireIndicators(form.indicators),
  };
}

export function toRawPolicy(form: ScenarioForm): RawPolicy | undefined {
  const threshold = form.settleThreshold.trim();
  return threshold === "" ? undefined : { plaintiff_settle_threshold: threshold };
}

export interface Debounced<A extends unknown[]> {
  (...args: A): void;
  cancel(): void;
}

/** Trailing-edge debounce; continuous slider drags collapse to one call. */
export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  waitMs: number,
): Debounced<A> {
  let timer: ReturnType<typeof setTimeout> | undefined;
  const wrapped = (...args: A): void => {
    if (timer !== undefined) clearTimeout(timer);
    timer = setTimeout(() => {
      timer = undefined;
      fn(...args);
    }, waitMs);
  };
  wrapped.cancel = (): void => {
    if (timer !== undefined) clearTimeout(timer);
    timer = undefined;
  };
  return wrapped;
}
