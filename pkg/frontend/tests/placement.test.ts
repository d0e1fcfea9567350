// Point placement: click fixes the position, drag direction fixes the
// bearing. Nothing can be placed before the image is calibrated.

import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { CalibrationRequired, UiSession } from "../src/session.js";
import { bearingFromDrag } from "../src/transform.js";
import { FakeServer } from "./mockTransport.js";

function freshSession(): UiSession {
  return new UiSession(new ApiClient(new FakeServer()));
}

function calibratedSession(): UiSession {
  const session = freshSession();
  // 500 px between markers 250 m apart: 0.5 m per pixel on a 1000 px image
  session.calibrate([100, 900], [600, 900], 250, 1000);
  return session;
}

describe("calibration gate", () => {
  it("blocks placement before calibration", () => {
    const session = freshSession();
    expect(session.isCalibrated).toBe(false);
    expect(() =>
      session.placeDirectedPoint({ xPx: 10, yPx: 10 }, { dxPx: 40, dyPx: 0 }),
    ).toThrow(CalibrationRequired);
    expect(() => session.placeWithBearing({ xPx: 10, yPx: 10 }, 90)).toThrow(
      CalibrationRequired,
    );
  });

  it("undo steps back across the calibration", () => {
    const session = freshSession();
    session.calibrate([100, 900], [600, 900], 250, 1000);
    expect(session.isCalibrated).toBe(true);
    expect(session.undo()).toBe(true);
    expect(session.isCalibrated).toBe(false);
    expect(() =>
      session.placeDirectedPoint({ xPx: 0, yPx: 1000 }, { dxPx: 40, dyPx: 0 }),
    ).toThrow(CalibrationRequired);
    expect(session.redo()).toBe(true);
    expect(session.isCalibrated).toBe(true);
  });

  it("measures the calibration distance back within a pixel", () => {
    const session = calibratedSession();
    const a = session.placeWithBearing({ xPx: 100, yPx: 900 }, 0);
    const b = session.placeWithBearing({ xPx: 600, yPx: 900 }, 0);
    expect(Math.abs(session.measuredDistance(a, b) - 250)).toBeLessThanOrEqual(0.5);
  });
});

describe("click-drag placement", () => {
  it("maps the image origin corner to world origin with an east drag", () => {
    const session = calibratedSession();
    const pose = session.placeDirectedPoint({ xPx: 0, yPx: 1000 }, { dxPx: 40, dyPx: 0 });
    expect(pose).toEqual({ x: 0, y: 0, bearing_deg: 90 });
  });

  it("hits cardinal bearings exactly", () => {
    expect(bearingFromDrag(0, -40)).toBe(0);
    expect(bearingFromDrag(40, 0)).toBe(90);
    expect(bearingFromDrag(0, 40)).toBe(180);
    expect(bearingFromDrag(-40, 0)).toBe(270);
  });

  it("rejects a drag too short to read a direction from", () => {
    expect(() => bearingFromDrag(1, 1)).toThrow(/too short/);
    const session = calibratedSession();
    expect(() =>
      session.placeDirectedPoint({ xPx: 50, yPx: 50 }, { dxPx: 0, dyPx: 2 }),
    ).toThrow(/too short/);
  });

  it("accepts a typed bearing as fallback", () => {
    const session = calibratedSession();
    const pose = session.placeWithBearing({ xPx: 200, yPx: 900 }, 37.5);
    expect(pose).toEqual({ x: 100, y: 50, bearing_deg: 37.5 });
    expect(() => session.placeWithBearing({ xPx: 200, yPx: 900 }, Number.NaN)).toThrow();
  });

  it("reads the bearing of an arbitrary drag", () => {
    const session = calibratedSession();
    expect(session.bearingOfDrag(30, -30)).toBeCloseTo(45, 12);
    expect(session.bearingOfDrag(-30, 30)).toBeCloseTo(225, 12);
  });
});

describe("pose round trip through the service", () => {
  it("returns placed poses unchanged from upload and fetch", async () => {
    const fake = new FakeServer();
    const client = new ApiClient(fake);
    const session = new UiSession(client);
    session.calibrate([100, 900], [600, 900], 250, 1000);
    const entry = session.placeDirectedPoint({ xPx: 123, yPx: 456 }, { dxPx: 17, dyPx: -29 });
    const exit = session.placeWithBearing({ xPx: 321, yPx: 654 }, 211.125);
    session.addEntryExitPair("gate", entry, exit);

    const created = await client.createScenario(session.scenario);
    const fetched = await client.getScenario(created.id);
    expect(fetched.scenario).toEqual(session.scenario);
    expect(fetched.scenario.entry_exit_pairs[0]!.entry).toEqual(entry);
    expect(fetched.scenario.entry_exit_pairs[0]!.exit).toEqual(exit);
  });
});
