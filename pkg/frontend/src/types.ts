/*
 * Wire types for the /api/v1 service.
 *
 * Money and fractions travel as decimal strings and are displayed verbatim;
 * the UI never does arithmetic on them (parsing happens only for chart
 * geometry). Every number on screen originates from a service response.
 */

export interface WireIndicators {
  z: number;
  kb: number;
  t_long: number;
  y: number;
  ka: number;
  t_short: number;
}

export interface RawScenario {
  id?: string;
  currency: string;
  claim: string;
  confirmation: string;
  t_d_override?: string;
  plaintiff_trial_cost: string;
  defendant_trial_cost: string;
  plaintiff_settle_cost: string;
  defendant_settle_cost: string;
  indicators: WireIndicators;
}

export interface RawPolicy {
  plaintiff_settle_threshold?: string;
  defendant_settle_bound?: string;
}

export interface ApiError {
  code: string;
  message: string;
  field_path: string;
}

export interface Envelope<T> {
  ok: boolean;
  result: T | null;
  errors: ApiError[];
}

export interface ComponentsResult {
  t_p: string;
  t_d: string;
  c_tp1: string;
  c_td1: string;
}

export interface EvaluationResult {
  id: string | null;
  currency: string;
  claim: string;
  confirmation: string;
  risk_coefficient: number;
  gross_margin: string;
  tc: string;
  tc_fraction_of_claim: string;
  components: ComponentsResult;
  settlement_gain: string;
  plaintiff_action: string;
  defendant_action: string;
  implausible: boolean;
  rationale: string[];
}

export interface SweepPoint {
  parameter_value: string;
  tc: string;
  tc_fraction: string;
  plaintiff_action: string;
  defendant_action: string;
  implausible: boolean;
}

export interface SweepResult {
  parameter_name: string;
  points: SweepPoint[];
}

export interface ComparisonResult {
  scenario_id: string;
  tc_before: string;
  tc_after: string;
  delta: string;
  verdict: string;
}

export interface PresetInfo {
  name: string;
  description: string;
  indicators: WireIndicators;
}
