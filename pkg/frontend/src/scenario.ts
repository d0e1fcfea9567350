// Scenario document types, mirroring the service's JSON schema exactly.
// Positions are meters in the calibrated world frame (y up), bearings are
// compass degrees clockwise from north, speeds km/h. The service owns all
// geometry and cost math; this file only carries the data shape.

export const SCHEMA_VERSION = 1;

export const SECTIONS = ["inbound", "outbound"] as const;
export type Section = (typeof SECTIONS)[number];

export interface PosePoint {
  x: number;
  y: number;
  bearing_deg: number;
}

export interface Calibration {
  p1_px: [number, number];
  p2_px: [number, number];
  distance_m: number;
  image_height_px: number;
}

export interface TruckConfig {
  max_forward_speed_kmh: number;
  max_reverse_speed_kmh: number;
  acceleration_ms2: number;
  deceleration_ms2: number;
  tipping_duration_s: number;
  turning_radius_m: number;
  fuel_cruise_forward_lph: number;
  fuel_cruise_reverse_lph: number;
  fuel_accel_forward_lph: number;
  fuel_accel_reverse_lph: number;
  fuel_decel_idle_lph: number;
  fuel_tipping_lph: number;
  tyre_wear_loaded_mmph: number;
  tyre_wear_empty_mmph: number;
}

export interface TurntableConfig {
  diameter_m: number;
  max_angular_speed_deg_s: number;
  angular_accel_deg_s2: number;
}

export interface Operations {
  trips_per_shift: number;
  shifts_per_day: number;
  days_per_year: number;
}

export interface EntryExitPair {
  label: string;
  entry: PosePoint;
  exit: PosePoint;
}

export interface DumpPoint {
  label: string;
  pose: PosePoint;
}

export interface Waypoint {
  route_id: string;
  section: Section;
  index: number;
  pose: PosePoint;
}

export interface ReverseOverride {
  route_id: string;
  pose: PosePoint;
}

export interface Scenario {
  schema_version: number;
  name: string;
  image_ref: string;
  calibration: Calibration;
  truck: TruckConfig;
  turntable: TurntableConfig;
  operations: Operations;
  entry_exit_pairs: EntryExitPair[];
  dump_points: DumpPoint[];
  waypoints: Waypoint[];
  reverse_overrides: ReverseOverride[];
}

export function defaultScenario(): Scenario {
  return {
    schema_version: SCHEMA_VERSION,
    name: "scenario",
    image_ref: "",
    calibration: {
      p1_px: [0.0, 0.0],
      p2_px: [100.0, 0.0],
      distance_m: 100.0,
      image_height_px: 1000.0,
    },
    truck: {
      max_forward_speed_kmh: 10.0,
      max_reverse_speed_kmh: 2.5,
      acceleration_ms2: 0.5,
      deceleration_ms2: 1.8,
      tipping_duration_s: 40.0,
      turning_radius_m: 28.4,
      fuel_cruise_forward_lph: 150.0,
      fuel_cruise_reverse_lph: 205.0,
      fuel_accel_forward_lph: 361.0,
      fuel_accel_reverse_lph: 395.0,
      fuel_decel_idle_lph: 53.7,
      fuel_tipping_lph: 211.7,
      tyre_wear_loaded_mmph: 0.0231,
      tyre_wear_empty_mmph: 0.0119,
    },
    turntable: {
      diameter_m: 15.0,
      max_angular_speed_deg_s: 6.0,
      angular_accel_deg_s2: 1.2,
    },
    operations: {
      trips_per_shift: 109,
      shifts_per_day: 3,
      days_per_year: 365,
    },
    entry_exit_pairs: [],
    dump_points: [],
    waypoints: [],
    reverse_overrides: [],
  };
}

export function routeIdFor(pairLabel: string, dumpLabel: string): string {
  return `${pairLabel}:${dumpLabel}`;
}

export function routeIds(scenario: Scenario): string[] {
  const ids: string[] = [];
  for (const pair of scenario.entry_exit_pairs) {
    for (const dump of scenario.dump_points) {
      ids.push(routeIdFor(pair.label, dump.label));
    }
  }
  return ids;
}

export function cloneScenario(scenario: Scenario): Scenario {
  return structuredClone(scenario);
}

function finitePose(pose: PosePoint): boolean {
  return (
    Number.isFinite(pose.x) && Number.isFinite(pose.y) && Number.isFinite(pose.bearing_deg)
  );
}

// Client-side mirror of the service's validation, so a draft is never sent
// (or serialized) in a state the server would reject.
export function validateScenario(scenario: Scenario): string[] {
  const problems: string[] = [];
  const cal = scenario.calibration;
  const span = Math.hypot(cal.p2_px[0] - cal.p1_px[0], cal.p2_px[1] - cal.p1_px[1]);
  if (span === 0) problems.push("calibration points coincide");
  if (!Number.isFinite(cal.distance_m) || cal.distance_m <= 0) {
    problems.push("calibration distance must be > 0");
  }
  if (cal.image_height_px <= 0) problems.push("image height must be > 0");

  const t = scenario.truck;
  if (t.max_forward_speed_kmh <= 0 || t.max_reverse_speed_kmh <= 0)
    problems.push("truck speeds must be > 0");
  if (t.acceleration_ms2 <= 0 || t.deceleration_ms2 <= 0)
    problems.push("truck ramp rates must be > 0");
  if (t.turning_radius_m <= 0) problems.push("turning radius must be > 0");
  if (t.tipping_duration_s < 0) problems.push("tipping duration must be >= 0");
  if (
    t.fuel_cruise_forward_lph < 0 ||
    t.fuel_cruise_reverse_lph < 0 ||
    t.fuel_accel_forward_lph < 0 ||
    t.fuel_accel_reverse_lph < 0 ||
    t.fuel_decel_idle_lph < 0 ||
    t.fuel_tipping_lph < 0 ||
    t.tyre_wear_loaded_mmph < 0 ||
    t.tyre_wear_empty_mmph < 0
  ) {
    problems.push("fuel and wear rates must be >= 0");
  }

  if (scenario.turntable.diameter_m <= 0) problems.push("turntable diameter must be > 0");
  if (scenario.turntable.max_angular_speed_deg_s <= 0 || scenario.turntable.angular_accel_deg_s2 <= 0) {
    problems.push("turntable rates must be > 0");
  }
  const ops = scenario.operations;
  if (Math.min(ops.trips_per_shift, ops.shifts_per_day, ops.days_per_year) <= 0) {
    problems.push("operations counts must be > 0");
  }

  const pairLabels = new Set<string>();
  for (const pair of scenario.entry_exit_pairs) {
    if (pairLabels.has(pair.label)) problems.push(`duplicate entry/exit label '${pair.label}'`);
    pairLabels.add(pair.label);
    if (!finitePose(pair.entry) || !finitePose(pair.exit)) {
      problems.push(`pair '${pair.label}' has a non-finite pose`);
    }
  }
  const dumpLabels = new Set<string>();
  for (const dump of scenario.dump_points) {
    if (dumpLabels.has(dump.label)) problems.push(`duplicate dump label '${dump.label}'`);
    dumpLabels.add(dump.label);
    if (!finitePose(dump.pose)) problems.push(`dump '${dump.label}' has a non-finite pose`);
  }

  const ids = new Set(routeIds(scenario));
  for (const w of scenario.waypoints) {
    if (!ids.has(w.route_id)) problems.push(`waypoint references unknown route '${w.route_id}'`);
    if (!SECTIONS.includes(w.section)) {
      problems.push(`waypoint section must be one of ${SECTIONS.join("/")}, got '${w.section}'`);
    }
    if (!Number.isInteger(w.index)) problems.push("waypoint index must be an integer");
    if (!finitePose(w.pose)) problems.push("waypoint has a non-finite pose");
  }
  const overrideRoutes = new Map<string, number>();
  for (const o of scenario.reverse_overrides) {
    if (!ids.has(o.route_id)) {
      problems.push(`reverse override references unknown route '${o.route_id}'`);
    }
    overrideRoutes.set(o.route_id, (overrideRoutes.get(o.route_id) ?? 0) + 1);
    if (!finitePose(o.pose)) problems.push("reverse override has a non-finite pose");
  }
  for (const [rid, count] of overrideRoutes) {
    if (count > 1) problems.push(`multiple reverse overrides for route '${rid}'`);
  }
  return problems;
}
