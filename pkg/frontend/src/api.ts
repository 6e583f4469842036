/*
 * Typed client for the evaluation service.
 *
 * Each endpoint keeps a monotonically increasing sequence number and an
 * AbortController. Issuing a new request aborts the previous in-flight one
 * and any response that arrives for a superseded ticket is reported as
 * "stale" so the UI can drop it. With a single browser tab this guarantees
 * the displayed result always reflects the latest input.
 */

import type {
  ApiError,
  ComparisonResult,
  Envelope,
  EvaluationResult,
  PresetInfo,
  RawPolicy,
  RawScenario,
  SweepResult,
  WireIndicators,
} from "./types.js";

export type ApiOutcome<T> =
  | { kind: "ok"; result: T }
  | { kind: "error"; errors: ApiError[] }
  | { kind: "stale" };

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

interface SweepRequest {
  scenario: RawScenario;
  f_min: string;
  f_max: string;
  steps: number;
  policy?: RawPolicy;
}

interface BreakEvenRequest {
  scenario: RawScenario;
  target_fraction: string;
}

interface CompareRequest {
  scenario: RawScenario;
  before: string;
  after: string;
  presets?: Array<{ name: string; description?: string; indicators: WireIndicators }>;
}

export class ApiClient {
  private readonly baseUrl: string;
  private readonly fetchFn: FetchLike;
  private readonly sequence = new Map<string, number>();
  private readonly inflight = new Map<string, AbortController>();

  constructor(baseUrl: string, fetchFn?: FetchLike) {
    this.baseUrl = baseUrl.replace(/\/+$/, "");
    this.fetchFn = fetchFn ?? ((input, init) => fetch(input, init));
  }

  evaluate(scenario: RawScenario, policy?: RawPolicy): Promise<ApiOutcome<EvaluationResult>> {
    const body: { scenario: RawScenario; policy?: RawPolicy } = { scenario };
    if (policy) body.policy = policy;
    return this.post("/api/v1/evaluate", body);
  }

  sweep(request: SweepRequest): Promise<ApiOutcome<SweepResult>> {
    return this.post("/api/v1/sweep", request);
  }

  breakeven(request: BreakEvenRequest): Promise<ApiOutcome<string>> {
    return this.post("/api/v1/breakeven", request);
  }

  compare(request: CompareRequest): Promise<ApiOutcome<ComparisonResult>> {
    return this.post("/api/v1/compare", request);
  }

  presets(): Promise<ApiOutcome<PresetInfo[]>> {
    return this.get("/api/v1/presets");
  }

  /** Plain-text liveness probe; the only path outside /api/v1. */
  async health(): Promise<ApiOutcome<string>> {
    const path = "/healthz";
    const { ticket, signal } = this.nextTicket(path);
    try {
      const response = await this.fetchFn(this.baseUrl + path, { method: "GET", signal });
      const text = await response.text();
      if (this.isStale(path, ticket)) return { kind: "stale" };
      if (response.ok) return { kind: "ok", result: text };
      return {
        kind: "error",
        errors: [{ code: "HealthCheckFailed", message: text, field_path: "" }],
      };
    } catch (error) {
      if (this.isStale(path, ticket)) return { kind: "stale" };
      return { kind: "error", errors: [transportError(error)] };
    }
  }

  private nextTicket(path: string): { ticket: number; signal: AbortSignal } {
    const ticket = (this.sequence.get(path) ?? 0) + 1;
    this.sequence.set(path, ticket);
    this.inflight.get(path)?.abort();
    const controller = new AbortController();
    this.inflight.set(path, controller);
    return { ticket, signal: controller.signal };
  }

  private isStale(path: string, ticket: number): boolean {
    return this.sequence.get(path) !== ticket;
  }

  private async post<T>(path: string, payload: unknown): Promise<ApiOutcome<T>> {
    const { ticket, signal } = this.nextTicket(path);
    let response: Response;
    try {
      response = await this.fetchFn(this.baseUrl + path, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(payload),
        signal,
      });
    } catch (error) {
      if (this.isStale(path, ticket)) return { kind: "stale" };
      return { kind: "error", errors: [transportError(error)] };
    }
    return this.settle(path, ticket, response);
  }

  private async get<T>(path: string): Promise<ApiOutcome<T>> {
    const { ticket, signal } = this.nextTicket(path);
    let response: Response;
    try {
      response = await this.fetchFn(this.baseUrl + path, { method: "GET", signal });
    } catch (error) {
      if (this.isStale(path, ticket)) return { kind: "stale" };
      return { kind: "error", errors: [transportError(error)] };
    }
    return this.settle(path, ticket, response);
  }

  private async settle<T>(
    path: string,
    ticket: number,
    response: Response,
  ): Promise<ApiOutcome<T>> {
    let envelope: Envelope<T>;
    try {
      envelope = (await response.json()) as Envelope<T>;
    } catch (error) {
      if (this.isStale(path, ticket)) return { kind: "stale" };
      return { kind: "error", errors: [transportError(error)] };
    }
    if (this.isStale(path, ticket)) return { kind: "stale" };
    if (envelope.ok && envelope.result !== null) {
      return { kind: "ok", result: envelope.result };
    }
    return { kind: "error", errors: envelope.errors };
  }
}

function transportError(error: unknown): ApiError {
  const message = error instanceof Error ? error.message : String(error);
  return { code: "TransportError", message, field_path: "" };
}
