// HTTP client for the scenario service. Everything goes through the
// Transport seam so tests can swap in a fake server; the UI itself never
// computes geometry or costs, it only displays what these calls return.

import type { Scenario } from "./scenario.js";

export interface TransportResponse {
  status: number;
  body: unknown;
}

export interface Transport {
  request(method: string, path: string, body?: unknown): Promise<TransportResponse>;
}

export class HttpTransport implements Transport {
  constructor(private readonly baseUrl: string) {}

  async request(method: string, path: string, body?: unknown): Promise<TransportResponse> {
    const resp = await fetch(this.baseUrl + path, {
      method,
      headers: body === undefined ? undefined : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const text = await resp.text();
    let parsed: unknown = text;
    const type = resp.headers.get("content-type") ?? "";
    if (type.includes("application/json")) {
      parsed = text === "" ? null : JSON.parse(text);
    }
    return { status: resp.status, body: parsed };
  }
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
    readonly errors: string[] = [],
  ) {
    super(message);
  }
}

// Result payload shapes, exactly as the solve endpoint returns them.

export interface ReverseManoeuvre {
  type: "reverse";
  form: string;
  reverse_point: { x: number; y: number; bearing_deg: number };
  reverse_length_m: number;
  long_reverse_warning: boolean;
}

export interface TurntableManoeuvre {
  type: "turntable";
  form: string;
  entry_bearing_deg: number;
  rotation_deg: number;
  used_fallback: boolean;
}

export interface CostPhase {
  label: string;
  kind: string;
  direction: string | null;
  loaded: boolean;
  duration_s: number;
  distance_m: number;
  fuel_l: number;
  tyre_wear_mm: number;
}

export interface CostCells {
  time_s: number;
  fuel_l: number;
  tyre_wear_mm: number;
  phases: CostPhase[];
}

export interface PathSegmentCells {
  kind: string;
  direction: string;
  length: number;
  turn?: string;
  radius?: number;
  sweep?: number;
}

export interface VariantCells {
  variant: "turntable" | "no_turntable";
  inbound_length_m: number;
  reverse_length_m: number;
  outbound_length_m: number;
  manoeuvre: ReverseManoeuvre | TurntableManoeuvre;
  cost: CostCells;
  polyline: Array<[number, number]>;
  segments: PathSegmentCells[];
}

export interface SavingsCells {
  time_per_trip_s: number;
  fuel_per_trip_l: number;
  wear_per_trip_mm: number;
  trips_per_year: number;
  annual_time_h: number;
  annual_fuel_l: number;
  annual_wear_mm: number;
}

export interface RouteIssue {
  route_id: string;
  variant: string | null;
  code: string;
  message: string;
}

export interface RouteCells {
  route_id: string;
  with_turntable: VariantCells | null;
  without_turntable: VariantCells | null;
  savings: SavingsCells | null;
  issues: RouteIssue[];
}

export interface ResultSet {
  scenario: string;
  routes: RouteCells[];
}

export interface ScenarioEnvelope {
  id: string;
  scenario: Scenario;
}

function asError(status: number, body: unknown): ApiError {
  if (typeof body === "object" && body !== null && "code" in body && "message" in body) {
    const b = body as { code: string; message: string; errors?: string[] };
    return new ApiError(status, b.code, b.message, b.errors ?? []);
  }
  return new ApiError(status, "unexpected_error", `request failed with status ${status}`);
}

export class ApiClient {
  constructor(private readonly transport: Transport) {}

  async createScenario(scenario: Scenario): Promise<ScenarioEnvelope> {
    const resp = await this.transport.request("POST", "/scenarios", scenario);
    if (resp.status !== 201) throw asError(resp.status, resp.body);
    return resp.body as ScenarioEnvelope;
  }

  async getScenario(id: string): Promise<ScenarioEnvelope> {
    const resp = await this.transport.request("GET", `/scenarios/${id}`);
    if (resp.status !== 200) throw asError(resp.status, resp.body);
    return resp.body as ScenarioEnvelope;
  }

  async putScenario(id: string, scenario: Scenario): Promise<ScenarioEnvelope> {
    const resp = await this.transport.request("PUT", `/scenarios/${id}`, scenario);
    if (resp.status !== 200) throw asError(resp.status, resp.body);
    return resp.body as ScenarioEnvelope;
  }

  async solveScenario(id: string, sampleStep?: number): Promise<ResultSet> {
    const query = sampleStep === undefined ? "" : `?sample_step=${sampleStep}`;
    const resp = await this.transport.request("POST", `/scenarios/${id}/solve${query}`);
    if (resp.status !== 200) throw asError(resp.status, resp.body);
    return resp.body as ResultSet;
  }

  async fetchSvg(id: string): Promise<string> {
    const resp = await this.transport.request("GET", `/scenarios/${id}/svg`);
    if (resp.status !== 200) throw asError(resp.status, resp.body);
    return resp.body as string;
  }
}
