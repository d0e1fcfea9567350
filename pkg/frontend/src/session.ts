// One user's editing session: a scenario draft, the last solve result, and
// an undo stack of canonical snapshots. Every edit that changes path
// geometry pushes exactly one PUT + one solve to the service; edits made
// while a solve is in flight queue behind it, never alongside it.

import { ApiClient, ApiError, type ResultSet } from "./api.js";
import { canonicalScenarioJson, parseScenarioJson } from "./canonical.js";
import {
  cloneScenario,
  defaultScenario,
  routeIds,
  validateScenario,
  type PosePoint,
  type Scenario,
  type Section,
  type TruckConfig,
  type TurntableConfig,
  type Operations,
} from "./scenario.js";
import {
  bearingFromDrag,
  placePose,
  transformFrom,
  worldDistance,
  type PixelPoint,
  type PixelTransform,
} from "./transform.js";

export class CalibrationRequired extends Error {
  constructor() {
    super("calibrate the image before placing points");
  }
}

export class InvalidEdit extends Error {
  constructor(readonly problems: string[]) {
    super(`edit rejected: ${problems.join("; ")}`);
  }
}

interface Snapshot {
  json: string;
  calibrated: boolean;
}

export interface Selection {
  routeId: string | null;
}

export class UiSession {
  private draft: Scenario;
  private calibrated = false;
  private remoteId: string | null = null;
  private undoStack: Snapshot[] = [];
  private redoStack: Snapshot[] = [];
  private queue: Promise<unknown> = Promise.resolve();

  lastResult: ResultSet | null = null;
  lastServerError: ApiError | null = null;
  selection: Selection = { routeId: null };
  sampleStep: number | undefined;

  constructor(private readonly api: ApiClient, initial?: Scenario) {
    this.draft = initial ? cloneScenario(initial) : defaultScenario();
    const problems = validateScenario(this.draft);
    if (problems.length > 0) throw new InvalidEdit(problems);
    // a loaded document already carries a vetted calibration
    this.calibrated = initial !== undefined;
  }

  // The draft is live state; treat it as read-only and mutate via methods.
  get scenario(): Scenario {
    return this.draft;
  }

  get isCalibrated(): boolean {
    return this.calibrated;
  }

  get scenarioId(): string | null {
    return this.remoteId;
  }

  canonicalJson(): string {
    return canonicalScenarioJson(this.draft);
  }

  transform(): PixelTransform {
    if (!this.calibrated) throw new CalibrationRequired();
    return transformFrom(this.draft.calibration);
  }

  // Draft mutation gate: clone, edit, validate, then commit with an undo
  // snapshot. A rejected edit leaves draft and history untouched.
  private applyLocal(mutate: (draft: Scenario) => void): void {
    const next = cloneScenario(this.draft);
    mutate(next);
    const problems = validateScenario(next);
    if (problems.length > 0) throw new InvalidEdit(problems);
    this.undoStack.push({ json: canonicalScenarioJson(this.draft), calibrated: this.calibrated });
    this.redoStack = [];
    this.draft = next;
  }

  undo(): boolean {
    const entry = this.undoStack.pop();
    if (!entry) return false;
    this.redoStack.push({ json: canonicalScenarioJson(this.draft), calibrated: this.calibrated });
    this.draft = parseScenarioJson(entry.json);
    this.calibrated = entry.calibrated;
    return true;
  }

  redo(): boolean {
    const entry = this.redoStack.pop();
    if (!entry) return false;
    this.undoStack.push({ json: canonicalScenarioJson(this.draft), calibrated: this.calibrated });
    this.draft = parseScenarioJson(entry.json);
    this.calibrated = entry.calibrated;
    return true;
  }

  get undoDepth(): number {
    return this.undoStack.length;
  }

  setName(name: string): void {
    this.applyLocal((d) => {
      d.name = name;
    });
  }

  loadImage(ref: string): void {
    this.applyLocal((d) => {
      d.image_ref = ref;
    });
  }

  calibrate(
    p1Px: [number, number],
    p2Px: [number, number],
    distanceM: number,
    imageHeightPx: number,
  ): void {
    this.applyLocal((d) => {
      d.calibration = {
        p1_px: [p1Px[0], p1Px[1]],
        p2_px: [p2Px[0], p2Px[1]],
        distance_m: distanceM,
        image_height_px: imageHeightPx,
      };
    });
    this.calibrated = true;
  }

  // Click fixes the position, the drag direction fixes the bearing. The
  // numeric fallback path passes bearingDeg directly instead of a drag.
  placeDirectedPoint(click: PixelPoint, drag: { dxPx: number; dyPx: number }): PosePoint {
    return placePose(this.transform(), click, drag);
  }

  placeWithBearing(click: PixelPoint, bearingDeg: number): PosePoint {
    const world = this.transform().toWorld(click);
    if (!Number.isFinite(bearingDeg)) throw new InvalidEdit(["bearing must be a number"]);
    return { x: world.x, y: world.y, bearing_deg: bearingDeg };
  }

  bearingOfDrag(dxPx: number, dyPx: number): number {
    return bearingFromDrag(dxPx, dyPx);
  }

  measuredDistance(a: PosePoint, b: PosePoint): number {
    return worldDistance(a, b);
  }

  addEntryExitPair(label: string, entry: PosePoint, exit: PosePoint): void {
    this.applyLocal((d) => {
      d.entry_exit_pairs.push({ label, entry, exit });
    });
  }

  addDumpPoint(label: string, pose: PosePoint): void {
    this.applyLocal((d) => {
      d.dump_points.push({ label, pose });
    });
  }

  routeIds(): string[] {
    return routeIds(this.draft);
  }

  selectRoute(routeId: string | null): void {
    this.selection = { routeId };
  }

  // Edits below re-solve: one PUT + one POST solve each, serialized so at
  // most one solve is ever in flight.

  insertWaypoint(
    routeId: string,
    section: Section,
    pose: PosePoint,
    index?: number,
  ): Promise<ResultSet> {
    this.applyLocal((d) => {
      const existing = d.waypoints.filter(
        (w) => w.route_id === routeId && w.section === section,
      );
      const next =
        index ?? (existing.length === 0 ? 0 : Math.max(...existing.map((w) => w.index)) + 1);
      d.waypoints.push({ route_id: routeId, section, index: next, pose });
    });
    return this.enqueueSolve();
  }

  dragReversePoint(routeId: string, pose: PosePoint): Promise<ResultSet> {
    this.applyLocal((d) => {
      const existing = d.reverse_overrides.find((o) => o.route_id === routeId);
      if (existing) {
        existing.pose = pose;
      } else {
        d.reverse_overrides.push({ route_id: routeId, pose });
      }
    });
    return this.enqueueSolve();
  }

  setTruckParam(key: keyof TruckConfig, value: number): Promise<ResultSet> {
    this.applyLocal((d) => {
      d.truck[key] = value;
    });
    return this.enqueueSolve();
  }

  setTurntableParam(key: keyof TurntableConfig, value: number): Promise<ResultSet> {
    this.applyLocal((d) => {
      d.turntable[key] = value;
    });
    return this.enqueueSolve();
  }

  setOperationsParam(key: keyof Operations, value: number): Promise<ResultSet> {
    this.applyLocal((d) => {
      d.operations[key] = value;
    });
    return this.enqueueSolve();
  }

  solve(): Promise<ResultSet> {
    return this.enqueueSolve();
  }

  private enqueueSolve(): Promise<ResultSet> {
    const job = this.queue.then(() => this.syncAndSolve());
    this.queue = job.catch(() => undefined);
    return job;
  }

  private async syncAndSolve(): Promise<ResultSet> {
    this.lastServerError = null;
    try {
      const body = cloneScenario(this.draft);
      if (this.remoteId === null) {
        const env = await this.api.createScenario(body);
        this.remoteId = env.id;
      } else {
        await this.api.putScenario(this.remoteId, body);
      }
      const result = await this.api.solveScenario(this.remoteId, this.sampleStep);
      this.lastResult = result;
      return result;
    } catch (err) {
      if (err instanceof ApiError) this.lastServerError = err;
      throw err;
    }
  }
}
