// Overlay construction: world-frame polylines from the payload mapped into
// image pixels, cusp and turntable glyphs, and visibility toggles that only
// hide drawing, never drop data.

import { describe, expect, it } from "vitest";

import type { ResultSet } from "../src/api.js";
import { buildOverlay, VariantVisibility } from "../src/overlay.js";
import { transformFrom } from "../src/transform.js";
import { fixtureResult, fixtureScenario } from "./helpers.js";

const scenario = fixtureScenario("demo.scenario.json");
const demo = fixtureResult("demo.result.json");

describe("overlay polylines", () => {
  it("draws both variants of all four routes", () => {
    const overlay = buildOverlay(demo, scenario);
    expect(overlay.polylines).toHaveLength(8);
    const byVariant = new Map<string, number>();
    for (const line of overlay.polylines) {
      byVariant.set(line.variant, (byVariant.get(line.variant) ?? 0) + 1);
    }
    expect(byVariant.get("turntable")).toBe(4);
    expect(byVariant.get("no_turntable")).toBe(4);

    demo.routes.forEach((route, i) => {
      expect(overlay.polylines[2 * i]!.routeId).toBe(route.route_id);
      expect(overlay.polylines[2 * i]!.pointsPx).toHaveLength(
        route.with_turntable!.polyline.length,
      );
      expect(overlay.polylines[2 * i + 1]!.pointsPx).toHaveLength(
        route.without_turntable!.polyline.length,
      );
    });
  });

  it("maps world points through the calibration, never its own scale", () => {
    const overlay = buildOverlay(demo, scenario);
    const transform = transformFrom(scenario.calibration);
    const worldLine = demo.routes[0]!.with_turntable!.polyline;
    const pixelLine = overlay.polylines[0]!.pointsPx;
    worldLine.forEach(([x, y], i) => {
      const p = transform.toPixels(x, y);
      expect(pixelLine[i]).toEqual([p.xPx, p.yPx]);
    });
    // the demo image is 0.5 m per pixel, 800 px tall, so (250, 190) lands
    // at (500, 420)
    const dumpPx = transform.toPixels(250, 190);
    expect(dumpPx.xPx).toBe(500);
    expect(dumpPx.yPx).toBe(420);
  });
});

describe("overlay glyphs", () => {
  it("marks each cusp at the payload reverse point", () => {
    const overlay = buildOverlay(demo, scenario);
    const cusps = overlay.glyphs.filter((g) => g.kind === "cusp");
    expect(cusps).toHaveLength(4);

    const transform = transformFrom(scenario.calibration);
    demo.routes.forEach((route, i) => {
      const manoeuvre = route.without_turntable!.manoeuvre;
      if (manoeuvre.type !== "reverse") throw new Error("expected a reverse manoeuvre");
      const p = transform.toPixels(manoeuvre.reverse_point.x, manoeuvre.reverse_point.y);
      expect(cusps[i]!.routeId).toBe(route.route_id);
      expect(cusps[i]!.atPx).toEqual([p.xPx, p.yPx]);
      expect(cusps[i]!.angleDeg).toBe(manoeuvre.reverse_point.bearing_deg);
    });
    expect(cusps[0]!.atPx[0]).toBeCloseTo(556.8, 9);
    expect(cusps[0]!.atPx[1]).toBeCloseTo(476.8, 9);
    expect(cusps[0]!.angleDeg).toBe(90);
  });

  it("marks each turntable at its dump point with the payload rotation", () => {
    const overlay = buildOverlay(demo, scenario);
    const tables = overlay.glyphs.filter((g) => g.kind === "turntable");
    expect(tables).toHaveLength(4);
    expect(tables[0]!.atPx).toEqual([500, 420]);
    expect(tables[0]!.angleDeg).toBe(180);
    expect(tables.map((g) => g.angleDeg)).toEqual(
      demo.routes.map((r) => {
        const m = r.with_turntable!.manoeuvre;
        return m.type === "turntable" ? m.rotation_deg : Number.NaN;
      }),
    );
  });
});

describe("variant visibility", () => {
  it("hides exactly the toggled variant and restores it on toggle back", () => {
    const vis = new VariantVisibility();
    vis.toggle("turntable");

    const hidden = buildOverlay(demo, scenario, vis);
    expect(hidden.polylines).toHaveLength(4);
    expect(hidden.polylines.every((l) => l.variant === "no_turntable")).toBe(true);
    expect(hidden.glyphs.filter((g) => g.kind === "turntable")).toHaveLength(0);
    expect(hidden.glyphs.filter((g) => g.kind === "cusp")).toHaveLength(4);

    vis.toggle("turntable");
    expect(buildOverlay(demo, scenario, vis).polylines).toHaveLength(8);

    vis.toggle("no_turntable");
    const noRev = buildOverlay(demo, scenario, vis);
    expect(noRev.polylines).toHaveLength(4);
    expect(noRev.polylines.every((l) => l.variant === "turntable")).toBe(true);
    expect(noRev.glyphs.filter((g) => g.kind === "cusp")).toHaveLength(0);
  });
});

describe("issue badges", () => {
  it("carries payload issues through regardless of visibility", () => {
    const doctored: ResultSet = JSON.parse(JSON.stringify(demo));
    doctored.routes[0]!.issues.push({
      route_id: "west:front",
      variant: "no_turntable",
      code: "long_reverse",
      message: "reverse leg exceeds comfortable length",
    });

    const vis = new VariantVisibility();
    vis.toggle("no_turntable");
    const overlay = buildOverlay(doctored, scenario, vis);
    expect(overlay.badges).toEqual([
      {
        routeId: "west:front",
        variant: "no_turntable",
        code: "long_reverse",
        message: "reverse leg exceeds comfortable length",
      },
    ]);
  });
});
