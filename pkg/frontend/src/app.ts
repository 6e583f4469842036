/*
 * Single-page what-if explorer.
 *
 * The DOM is the form state: every recalculation reads the controls, posts
 * the scenario to the service, and writes response fields back verbatim.
 * Nothing in the model is computed client-side.
 */

import { ApiClient, type ApiOutcome } from "./api.js";
import { renderSweepChart } from "./chart.js";
import {
  debounce,
  defaultForm,
  toRawPolicy,
  toRawScenario,
  type CourtSwitch,
  type DurationSwitch,
  type ScenarioForm,
} from "./state.js";
import type { ApiError, EvaluationResult } from "./types.js";

export interface AppOptions {
  root: HTMLElement;
  client: ApiClient;
  debounceMs?: number;
}

export interface App {
  destroy(): void;
  /** Resolves when the evaluate triggered by the last edit has settled. */
  settled(): Promise<void>;
}

const TEMPLATE = `
<div class="litigacost-app">
  <section class="panel" id="scenario-panel">
    <h2>Scenario</h2>
    <div class="grid">
      <label>Claim
        <input id="claim" data-eval value="" inputmode="decimal">
      </label>
      <label>Currency
        <input id="currency" data-eval value="" maxlength="3">
      </label>
      <label>Confirmation <output id="confirmation-label"></output>
        <input id="confirmation" data-eval type="range" min="0" max="100" step="0.1">
      </label>
      <label>Plaintiff trial cost
        <input id="cost-tp1" data-eval inputmode="decimal">
      </label>
      <label>Defendant trial cost
        <input id="cost-td1" data-eval inputmode="decimal">
      </label>
      <label>Plaintiff settlement cost
        <input id="cost-tp" data-eval inputmode="decimal">
      </label>
      <label>Defendant settlement cost
        <input id="cost-td" data-eval inputmode="decimal">
      </label>
      <label>Settle threshold (optional)
        <input id="threshold" data-eval inputmode="decimal" placeholder="0.25">
      </label>
    </div>
    <fieldset id="indicators">
      <legend>Institutional indicators</legend>
      <label><input id="ind-z" data-eval type="checkbox"> Expertise unreliable (z)</label>
      <label><input id="ind-y" data-eval type="checkbox"> Conflict of interests (y)</label>
      <label>Court
        <select id="court" data-eval>
          <option value="unpredictable">unpredictable (kb)</option>
          <option value="predictable">predictable (ka)</option>
        </select>
      </label>
      <label>Proceedings
        <select id="duration" data-eval>
          <option value="over-a-year">over a year (t_long)</option>
          <option value="under-a-year">under a year (t_short)</option>
        </select>
      </label>
    </fieldset>
  </section>

  <section class="panel" id="result-panel">
    <h2>Evaluation</h2>
    <span id="implausible" class="badge badge-warn" hidden>implausible scenario</span>
    <dl>
      <dt>Transaction cost</dt>
      <dd><span id="tc"></span> <span id="result-currency" class="currency"></span></dd>
      <dt>Share of claim</dt>
      <dd id="tc-fraction"></dd>
      <dt>Risk coefficient</dt>
      <dd id="risk-coefficient"></dd>
      <dt>Gross margin</dt>
      <dd id="gross-margin"></dd>
      <dt>Settlement gain</dt>
      <dd id="settlement-gain"></dd>
      <dt>Plaintiff</dt>
      <dd id="plaintiff-action"></dd>
      <dt>Defendant</dt>
      <dd id="defendant-action"></dd>
    </dl>
    <ul id="rationale"></ul>
    <ul id="errors" class="errors" hidden></ul>
  </section>

  <section class="panel" id="sweep-panel">
    <h2>Confirmation sweep</h2>
    <label>From <input id="sweep-min" value="0.5000"></label>
    <label>To <input id="sweep-max" value="0.8000"></label>
    <label>Steps <input id="sweep-steps" type="number" min="2" value="4"></label>
    <button id="sweep-run" type="button">Sweep</button>
    <svg id="sweep-chart" role="img" aria-label="tc fraction vs confirmation"></svg>
    <ul id="sweep-errors" class="errors" hidden></ul>
  </section>

  <section class="panel" id="regime-panel">
    <h2>Regime comparison</h2>
    <label>Before <select id="preset-before"></select></label>
    <label>After <select id="preset-after"></select></label>
    <button id="compare-run" type="button">Compare</button>
    <dl>
      <dt>TC before</dt><dd id="tc-before"></dd>
      <dt>TC after</dt><dd id="tc-after"></dd>
      <dt>Delta</dt><dd id="delta"></dd>
    </dl>
    <span id="verdict" class="badge" hidden></span>
    <ul id="compare-errors" class="errors" hidden></ul>
  </section>
</div>
`;

/* First field_path segment (scenario prefix stripped) to a control id. */
const FIELD_TARGETS: Record<string, string> = {
  claim: "claim",
  currency: "currency",
  confirmation: "confirmation",
  plaintiff_trial_cost: "cost-tp1",
  defendant_trial_cost: "cost-td1",
  plaintiff_settle_cost: "cost-tp",
  defendant_settle_cost: "cost-td",
  indicators: "indicators",
  policy: "threshold",
  plaintiff_settle_threshold: "threshold",
};

export function createApp(options: AppOptions): App {
  const { root, client } = options;
  const debounceMs = options.debounceMs ?? 150;
  root.innerHTML = TEMPLATE;

  const must = <T extends Element>(id: string): T => {
    const node = root.querySelector(`#${id}`);
    if (!node) throw new Error(`missing element #${id}`);
    return node as T;
  };

  const claim = must<HTMLInputElement>("claim");
  const currency = must<HTMLInputElement>("currency");
  const confirmation = must<HTMLInputElement>("confirmation");
  const confirmationLabel = must<HTMLOutputElement>("confirmation-label");
  const costTp1 = must<HTMLInputElement>("cost-tp1");
  const costTd1 = must<HTMLInputElement>("cost-td1");
  const costTp = must<HTMLInputElement>("cost-tp");
  const costTd = must<HTMLInputElement>("cost-td");
  const threshold = must<HTMLInputElement>("threshold");
  const indZ = must<HTMLInputElement>("ind-z");
  const indY = must<HTMLInputElement>("ind-y");
  const court = must<HTMLSelectElement>("court");
  const duration = must<HTMLSelectElement>("duration");

  const seedForm = (form: ScenarioForm): void => {
    claim.value = form.claim;
    currency.value = form.currency;
    confirmation.value = String(form.confirmationPct);
    costTp1.value = form.plaintiffTrialCost;
    costTd1.value = form.defendantTrialCost;
    costTp.value = form.plaintiffSettleCost;
    costTd.value = form.defendantSettleCost;
    threshold.value = form.settleThreshold;
    indZ.checked = form.indicators.z === 1;
    indY.checked = form.indicators.y === 1;
    court.value = form.indicators.court;
    duration.value = form.indicators.duration;
  };
  seedForm(defaultForm());

  const readForm = (): ScenarioForm => ({
    currency: currency.value,
    claim: claim.value,
    confirmationPct: Number(confirmation.value),
    plaintiffTrialCost: costTp1.value,
    defendantTrialCost: costTd1.value,
    plaintiffSettleCost: costTp.value,
    defendantSettleCost: costTd.value,
    indicators: {
      z: indZ.checked ? 1 : 0,
      y: indY.checked ? 1 : 0,
      court: court.value as CourtSwitch,
      duration: duration.value as DurationSwitch,
    },
    settleThreshold: threshold.value,
  });

  const showErrors = (list: HTMLUListElement, errors: ApiError[]): void => {
    list.replaceChildren(
      ...errors.map((error) => {
        const item = document.createElement("li");
        const where = error.field_path ? ` ${error.field_path}` : "";
        item.textContent = `[${error.code}]${where}: ${error.message}`;
        return item;
      }),
    );
    list.hidden = errors.length === 0;
  };

  const highlight = (errors: ApiError[]): void => {
    for (const node of root.querySelectorAll(".field-error")) {
      node.classList.remove("field-error");
    }
    for (const error of errors) {
      if (!error.field_path) continue;
      const path = error.field_path.replace(/^scenario\.?/, "");
      const head = path.split(/[.[]/, 1)[0] ?? "";
      const targetId = FIELD_TARGETS[head];
      if (targetId) must<HTMLElement>(targetId).classList.add("field-error");
    }
  };

  const resultFields: Array<[string, (r: EvaluationResult) => string]> = [
    ["tc", (r) => r.tc],
    ["result-currency", (r) => r.currency],
    ["tc-fraction", (r) => r.tc_fraction_of_claim],
    ["risk-coefficient", (r) => String(r.risk_coefficient)],
    ["gross-margin", (r) => r.gross_margin],
    ["settlement-gain", (r) => r.settlement_gain],
    ["plaintiff-action", (r) => r.plaintiff_action],
    ["defendant-action", (r) => r.defendant_action],
  ];

  const renderEvaluation = (outcome: ApiOutcome<EvaluationResult>): void => {
    if (outcome.kind === "stale") return;
    const errorList = must<HTMLUListElement>("errors");
    if (outcome.kind === "error") {
      showErrors(errorList, outcome.errors);
      highlight(outcome.errors);
      return;
    }
    showErrors(errorList, []);
    highlight([]);
    const result = outcome.result;
    for (const [id, pick] of resultFields) {
      must<HTMLElement>(id).textContent = pick(result);
    }
    must<HTMLElement>("implausible").hidden = !result.implausible;
    must<HTMLUListElement>("rationale").replaceChildren(
      ...result.rationale.map((tag) => {
        const item = document.createElement("li");
        item.textContent = tag;
        return item;
      }),
    );
  };

  let pendingEvaluate: Promise<void> = Promise.resolve();
  const runEvaluate = (): void => {
    const form = readForm();
    pendingEvaluate = client
      .evaluate(toRawScenario(form), toRawPolicy(form))
      .then(renderEvaluation);
  };

  const scheduleEvaluate = debounce(runEvaluate, debounceMs);
  const controls = root.querySelectorAll<HTMLElement>("[data-eval]");
  const onEdit = (): void => {
    confirmationLabel.textContent = `${confirmation.value}%`;
    scheduleEvaluate();
  };
  for (const control of controls) {
    control.addEventListener("input", onEdit);
    control.addEventListener("change", onEdit);
  }
  confirmationLabel.textContent = `${confirmation.value}%`;

  const runSweep = (): void => {
    const form = readForm();
    const policy = toRawPolicy(form);
    pendingEvaluate = client
      .sweep({
        scenario: toRawScenario(form),
        f_min: must<HTMLInputElement>("sweep-min").value.trim(),
        f_max: must<HTMLInputElement>("sweep-max").value.trim(),
        steps: Number(must<HTMLInputElement>("sweep-steps").value),
        ...(policy ? { policy } : {}),
      })
      .then((outcome) => {
        const errorList = must<HTMLUListElement>("sweep-errors");
        if (outcome.kind === "stale") return;
        if (outcome.kind === "error") {
          showErrors(errorList, outcome.errors);
          highlight(outcome.errors);
          return;
        }
        showErrors(errorList, []);
        highlight([]);
        renderSweepChart(must<SVGSVGElement>("sweep-chart"), outcome.result.points);
      });
  };
  must<HTMLButtonElement>("sweep-run").addEventListener("click", runSweep);

  const runCompare = (): void => {
    const form = readForm();
    pendingEvaluate = client
      .compare({
        scenario: toRawScenario(form),
        before: must<HTMLSelectElement>("preset-before").value,
        after: must<HTMLSelectElement>("preset-after").value,
      })
      .then((outcome) => {
        const errorList = must<HTMLUListElement>("compare-errors");
        if (outcome.kind === "stale") return;
        if (outcome.kind === "error") {
          showErrors(errorList, outcome.errors);
          return;
        }
        showErrors(errorList, []);
        const result = outcome.result;
        must<HTMLElement>("tc-before").textContent = result.tc_before;
        must<HTMLElement>("tc-after").textContent = result.tc_after;
        const delta = must<HTMLElement>("delta");
        delta.textContent = result.delta;
        delta.classList.toggle("delta-good", result.delta.startsWith("-"));
        const verdict = must<HTMLElement>("verdict");
        verdict.textContent = result.verdict;
        verdict.hidden = false;
        verdict.classList.toggle("badge-good", result.verdict === "ReformEffective");
        verdict.classList.toggle("badge-warn", result.verdict !== "ReformEffective");
      });
  };
  must<HTMLButtonElement>("compare-run").addEventListener("click", runCompare);

  const loadPresets = (): Promise<void> =>
    client.presets().then((outcome) => {
      if (outcome.kind !== "ok") return;
      for (const select of [
        must<HTMLSelectElement>("preset-before"),
        must<HTMLSelectElement>("preset-after"),
      ]) {
        select.replaceChildren(
          ...outcome.result.map((preset) => {
            const option = document.createElement("option");
            option.value = preset.name;
            option.textContent = preset.name;
            option.title = preset.description;
            return option;
          }),
        );
      }
    });

  runEvaluate();
  const initial = Promise.all([pendingEvaluate, loadPresets()]);

  return {
    destroy(): void {
      scheduleEvaluate.cancel();
      root.replaceChildren();
    },
    settled(): Promise<void> {
      return initial.then(() => pendingEvaluate);
    },
  };
}
