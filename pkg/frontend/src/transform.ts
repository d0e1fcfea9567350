// Pixel/world mapping fixed by the calibration gesture. All pixel<->meter
// math lives here; zoom and pan never touch it, they wrap the drawing layer.

import type { Calibration, PosePoint } from "./scenario.js";

export interface PixelPoint {
  xPx: number;
  yPx: number;
}

export class PixelTransform {
  readonly scale: number; // meters per pixel
  readonly imageHeightPx: number;

  constructor(scale: number, imageHeightPx: number) {
    this.scale = scale;
    this.imageHeightPx = imageHeightPx;
  }

  // World frame is y-up with the origin at the image's bottom-left corner.
  toWorld(p: PixelPoint): { x: number; y: number } {
    return { x: p.xPx * this.scale, y: (this.imageHeightPx - p.yPx) * this.scale };
  }

  toPixels(x: number, y: number): PixelPoint {
    return { xPx: x / this.scale, yPx: this.imageHeightPx - y / this.scale };
  }
}

export function transformFrom(cal: Calibration): PixelTransform {
  const span = Math.hypot(cal.p2_px[0] - cal.p1_px[0], cal.p2_px[1] - cal.p1_px[1]);
  if (span === 0) throw new Error("calibration points coincide");
  if (!Number.isFinite(cal.distance_m) || cal.distance_m <= 0) {
    throw new Error(`calibration distance must be > 0, got ${cal.distance_m}`);
  }
  if (cal.image_height_px <= 0) throw new Error("image height must be > 0");
  return new PixelTransform(cal.distance_m / span, cal.image_height_px);
}

// Screen y grows downward, so the drag's north component is -dy. Cardinal
// drags land exactly on 0/90/180/270.
export function bearingFromDrag(dxPx: number, dyPx: number): number {
  if (Math.hypot(dxPx, dyPx) < 3) {
    throw new Error("drag too short to set a bearing");
  }
  const deg = Math.atan2(dxPx, -dyPx) * (180 / Math.PI);
  return ((deg % 360) + 360) % 360;
}

export function placePose(
  transform: PixelTransform,
  click: PixelPoint,
  drag: { dxPx: number; dyPx: number },
): PosePoint {
  const world = transform.toWorld(click);
  return { x: world.x, y: world.y, bearing_deg: bearingFromDrag(drag.dxPx, drag.dyPx) };
}

export function worldDistance(a: PosePoint, b: PosePoint): number {
  return Math.hypot(b.x - a.x, b.y - a.y);
}
