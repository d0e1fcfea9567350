// Path overlay model: solve-result polylines mapped into image pixel space,
// plus manoeuvre glyphs and per-route error badges. Rendering (canvas/SVG)
// consumes this model; zoom is applied by the drawing layer afterwards so
// the pixel math here stays calibration-only.

import type { ResultSet, RouteCells } from "./api.js";
import { routeIdFor, type Scenario } from "./scenario.js";
import { transformFrom } from "./transform.js";

export type VariantName = "turntable" | "no_turntable";

export interface OverlayPolyline {
  routeId: string;
  variant: VariantName;
  pointsPx: Array<[number, number]>;
}

export interface OverlayGlyph {
  routeId: string;
  variant: VariantName;
  kind: "cusp" | "turntable";
  atPx: [number, number];
  // cusp: bearing the truck points along when it stops; turntable: platform rotation
  angleDeg: number;
}

export interface OverlayBadge {
  routeId: string;
  variant: string | null;
  code: string;
  message: string;
}

export interface Overlay {
  polylines: OverlayPolyline[];
  glyphs: OverlayGlyph[];
  badges: OverlayBadge[];
}

export class VariantVisibility {
  private readonly hidden = new Set<VariantName>();

  isVisible(variant: VariantName): boolean {
    return !this.hidden.has(variant);
  }

  toggle(variant: VariantName): void {
    if (this.hidden.has(variant)) this.hidden.delete(variant);
    else this.hidden.add(variant);
  }

  show(variant: VariantName): void {
    this.hidden.delete(variant);
  }
}

function dumpPoseFor(scenario: Scenario, routeId: string): { x: number; y: number } | null {
  for (const pair of scenario.entry_exit_pairs) {
    for (const dump of scenario.dump_points) {
      if (routeIdFor(pair.label, dump.label) === routeId) {
        return { x: dump.pose.x, y: dump.pose.y };
      }
    }
  }
  return null;
}

function glyphsFor(
  route: RouteCells,
  scenario: Scenario,
  toPx: (x: number, y: number) => [number, number],
  visibility: VariantVisibility,
): OverlayGlyph[] {
  const glyphs: OverlayGlyph[] = [];
  const rev = route.without_turntable;
  if (rev && visibility.isVisible("no_turntable") && rev.manoeuvre.type === "reverse") {
    const p = rev.manoeuvre.reverse_point;
    glyphs.push({
      routeId: route.route_id,
      variant: "no_turntable",
      kind: "cusp",
      atPx: toPx(p.x, p.y),
      angleDeg: p.bearing_deg,
    });
  }
  const tt = route.with_turntable;
  if (tt && visibility.isVisible("turntable") && tt.manoeuvre.type === "turntable") {
    const center = dumpPoseFor(scenario, route.route_id);
    if (center) {
      glyphs.push({
        routeId: route.route_id,
        variant: "turntable",
        kind: "turntable",
        atPx: toPx(center.x, center.y),
        angleDeg: tt.manoeuvre.rotation_deg,
      });
    }
  }
  return glyphs;
}

export function buildOverlay(
  result: ResultSet,
  scenario: Scenario,
  visibility: VariantVisibility = new VariantVisibility(),
): Overlay {
  const transform = transformFrom(scenario.calibration);
  const toPx = (x: number, y: number): [number, number] => {
    const p = transform.toPixels(x, y);
    return [p.xPx, p.yPx];
  };

  const polylines: OverlayPolyline[] = [];
  const glyphs: OverlayGlyph[] = [];
  const badges: OverlayBadge[] = [];

  for (const route of result.routes) {
    for (const variant of [route.with_turntable, route.without_turntable]) {
      if (variant === null) continue;
      if (!visibility.isVisible(variant.variant)) continue;
      polylines.push({
        routeId: route.route_id,
        variant: variant.variant,
        pointsPx: variant.polyline.map(([x, y]) => toPx(x, y)),
      });
    }
    glyphs.push(...glyphsFor(route, scenario, toPx, visibility));
    for (const issue of route.issues) {
      badges.push({
        routeId: route.route_id,
        variant: issue.variant,
        code: issue.code,
        message: issue.message,
      });
    }
  }
  return { polylines, glyphs, badges };
}
