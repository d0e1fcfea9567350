// Canonical scenario serialization, byte-identical to the service's own
// files (2-space indent, fixed key order, trailing newline). The service
// formats floats with Python's repr rules, so integral floats keep a ".0"
// and tiny/huge magnitudes switch to exponent form at 1e-4 / 1e16; plain
// JSON.stringify would drop the ".0" and break byte equality.

import type { PosePoint, Scenario } from "./scenario.js";

type Node = { lit: string } | { obj: Array<[string, Node]> } | { arr: Node[] };

export function pyFloat(value: number): string {
  if (!Number.isFinite(value)) {
    throw new Error(`non-finite number in scenario: ${value}`);
  }
  if (value === 0) {
    return Object.is(value, -0) ? "-0.0" : "0.0";
  }
  const abs = Math.abs(value);
  if (abs >= 1e16 || abs < 1e-4) {
    const [mantissa, expPart] = value.toExponential().split("e") as [string, string];
    const exp = parseInt(expPart, 10);
    const sign = exp < 0 ? "-" : "+";
    return `${mantissa}e${sign}${String(Math.abs(exp)).padStart(2, "0")}`;
  }
  const s = String(value);
  return s.includes(".") ? s : s + ".0";
}

export function pyInt(value: number): string {
  if (!Number.isInteger(value)) {
    throw new Error(`expected an integer, got ${value}`);
  }
  return String(value);
}

// ensure_ascii escaping: everything outside 0x20..0x7e becomes \uXXXX
// (lowercase hex), matching the service byte for byte on non-ASCII labels.
export function pyString(value: string): string {
  let out = '"';
  for (let i = 0; i < value.length; i++) {
    const code = value.charCodeAt(i);
    const ch = value[i]!;
    if (ch === '"') out += '\\"';
    else if (ch === "\\") out += "\\\\";
    else if (ch === "\n") out += "\\n";
    else if (ch === "\t") out += "\\t";
    else if (ch === "\r") out += "\\r";
    else if (ch === "\b") out += "\\b";
    else if (ch === "\f") out += "\\f";
    else if (code >= 0x20 && code < 0x7f) out += ch;
    else out += "\\u" + code.toString(16).padStart(4, "0");
  }
  return out + '"';
}

const flt = (v: number): Node => ({ lit: pyFloat(v) });
const int = (v: number): Node => ({ lit: pyInt(v) });
const str = (v: string): Node => ({ lit: pyString(v) });

function poseNode(pose: PosePoint): Node {
  return {
    obj: [
      ["x", flt(pose.x)],
      ["y", flt(pose.y)],
      ["bearing_deg", flt(pose.bearing_deg)],
    ],
  };
}

function scenarioTree(s: Scenario): Node {
  return {
    obj: [
      ["schema_version", int(s.schema_version)],
      ["name", str(s.name)],
      ["image_ref", str(s.image_ref)],
      [
        "calibration",
        {
          obj: [
            ["p1_px", { arr: s.calibration.p1_px.map(flt) }],
            ["p2_px", { arr: s.calibration.p2_px.map(flt) }],
            ["distance_m", flt(s.calibration.distance_m)],
            ["image_height_px", flt(s.calibration.image_height_px)],
          ],
        },
      ],
      [
        "truck",
        {
          obj: [
            ["max_forward_speed_kmh", flt(s.truck.max_forward_speed_kmh)],
            ["max_reverse_speed_kmh", flt(s.truck.max_reverse_speed_kmh)],
            ["acceleration_ms2", flt(s.truck.acceleration_ms2)],
            ["deceleration_ms2", flt(s.truck.deceleration_ms2)],
            ["tipping_duration_s", flt(s.truck.tipping_duration_s)],
            ["turning_radius_m", flt(s.truck.turning_radius_m)],
            ["fuel_cruise_forward_lph", flt(s.truck.fuel_cruise_forward_lph)],
            ["fuel_cruise_reverse_lph", flt(s.truck.fuel_cruise_reverse_lph)],
            ["fuel_accel_forward_lph", flt(s.truck.fuel_accel_forward_lph)],
            ["fuel_accel_reverse_lph", flt(s.truck.fuel_accel_reverse_lph)],
            ["fuel_decel_idle_lph", flt(s.truck.fuel_decel_idle_lph)],
            ["fuel_tipping_lph", flt(s.truck.fuel_tipping_lph)],
            ["tyre_wear_loaded_mmph", flt(s.truck.tyre_wear_loaded_mmph)],
            ["tyre_wear_empty_mmph", flt(s.truck.tyre_wear_empty_mmph)],
          ],
        },
      ],
      [
        "turntable",
        {
          obj: [
            ["diameter_m", flt(s.turntable.diameter_m)],
            ["max_angular_speed_deg_s", flt(s.turntable.max_angular_speed_deg_s)],
            ["angular_accel_deg_s2", flt(s.turntable.angular_accel_deg_s2)],
          ],
        },
      ],
      [
        "operations",
        {
          obj: [
            ["trips_per_shift", int(s.operations.trips_per_shift)],
            ["shifts_per_day", int(s.operations.shifts_per_day)],
            ["days_per_year", int(s.operations.days_per_year)],
          ],
        },
      ],
      [
        "entry_exit_pairs",
        {
          arr: s.entry_exit_pairs.map((p) => ({
            obj: [
              ["label", str(p.label)],
              ["entry", poseNode(p.entry)],
              ["exit", poseNode(p.exit)],
            ] as Array<[string, Node]>,
          })),
        },
      ],
      [
        "dump_points",
        {
          arr: s.dump_points.map((d) => ({
            obj: [
              ["label", str(d.label)],
              ["pose", poseNode(d.pose)],
            ] as Array<[string, Node]>,
          })),
        },
      ],
      [
        "waypoints",
        {
          arr: s.waypoints.map((w) => ({
            obj: [
              ["route_id", str(w.route_id)],
              ["section", str(w.section)],
              ["index", int(w.index)],
              ["pose", poseNode(w.pose)],
            ] as Array<[string, Node]>,
          })),
        },
      ],
      [
        "reverse_overrides",
        {
          arr: s.reverse_overrides.map((o) => ({
            obj: [
              ["route_id", str(o.route_id)],
              ["pose", poseNode(o.pose)],
            ] as Array<[string, Node]>,
          })),
        },
      ],
    ],
  };
}

function emit(node: Node, depth: number): string {
  if ("lit" in node) return node.lit;
  const inner = "  ".repeat(depth + 1);
  const outer = "  ".repeat(depth);
  if ("arr" in node) {
    if (node.arr.length === 0) return "[]";
    const items = node.arr.map((n) => inner + emit(n, depth + 1));
    return "[\n" + items.join(",\n") + "\n" + outer + "]";
  }
  if (node.obj.length === 0) return "{}";
  const items = node.obj.map(([k, v]) => inner + pyString(k) + ": " + emit(v, depth + 1));
  return "{\n" + items.join(",\n") + "\n" + outer + "}";
}

export function canonicalScenarioJson(scenario: Scenario): string {
  return emit(scenarioTree(scenario), 0) + "\n";
}

// Parse a scenario document, tolerating the same optional fields the
// service tolerates but insisting on the supported schema version.
export function parseScenarioJson(text: string): Scenario {
  const data = JSON.parse(text);
  if (typeof data !== "object" || data === null || Array.isArray(data)) {
    throw new Error("scenario document must be a JSON object");
  }
  if (data.schema_version !== 1) {
    throw new Error(`unsupported schema_version ${data.schema_version}, expected 1`);
  }
  return data as Scenario;
}
