// Byte equality against files the service itself wrote. These fixtures came
// straight from the HTTP API's storage format; if any assertion here fails,
// uploads from this client would no longer round-trip byte-identically.

import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import {
  canonicalScenarioJson,
  parseScenarioJson,
  pyFloat,
  pyInt,
  pyString,
} from "../src/canonical.js";
import { UiSession } from "../src/session.js";
import { fixtureText } from "./helpers.js";
import { FakeServer } from "./mockTransport.js";

describe("float formatting", () => {
  it("keeps the .0 on integral values", () => {
    expect(pyFloat(1)).toBe("1.0");
    expect(pyFloat(123)).toBe("123.0");
    expect(pyFloat(-40)).toBe("-40.0");
    expect(pyFloat(9e15)).toBe("9000000000000000.0");
  });

  it("distinguishes signed zero", () => {
    expect(pyFloat(0)).toBe("0.0");
    expect(pyFloat(-0)).toBe("-0.0");
  });

  it("passes fractional values through unchanged", () => {
    expect(pyFloat(1.5)).toBe("1.5");
    expect(pyFloat(0.0231)).toBe("0.0231");
    expect(pyFloat(335.196595)).toBe("335.196595");
    expect(pyFloat(0.0001)).toBe("0.0001");
  });

  // exponent form kicks in below 1e-4 and at 1e16, two-digit exponent
  it("switches to exponent form at the same thresholds as the service", () => {
    expect(pyFloat(0.00001)).toBe("1e-05");
    expect(pyFloat(0.000015)).toBe("1.5e-05");
    expect(pyFloat(1e16)).toBe("1e+16");
    expect(pyFloat(1e21)).toBe("1e+21");
    expect(pyFloat(-2.5e-7)).toBe("-2.5e-07");
  });

  it("rejects non-finite values", () => {
    expect(() => pyFloat(Number.NaN)).toThrow();
    expect(() => pyFloat(Number.POSITIVE_INFINITY)).toThrow();
  });
});

describe("int and string formatting", () => {
  it("writes integers bare", () => {
    expect(pyInt(119355)).toBe("119355");
    expect(() => pyInt(5.5)).toThrow();
  });

  it("escapes like ensure_ascii", () => {
    expect(pyString("plain")).toBe('"plain"');
    expect(pyString('say "hi"\\')).toBe('"say \\"hi\\"\\\\"');
    expect(pyString("line\nbreak\ttab")).toBe('"line\\nbreak\\ttab"');
    expect(pyString("crushér")).toBe('"crush\\u00e9r"');
    expect(pyString("")).toBe('"\\u0001"');
  });
});

describe("scenario documents", () => {
  it("re-serializes the shipped demo byte for byte", () => {
    const text = fixtureText("demo.scenario.json");
    expect(canonicalScenarioJson(parseScenarioJson(text))).toBe(text);
  });

  it("re-serializes edited documents byte for byte", () => {
    for (const name of [
      "clicks.scenario.json",
      "edit.waypoint.scenario.json",
      "edit.reverse.scenario.json",
    ]) {
      const text = fixtureText(name);
      expect(canonicalScenarioJson(parseScenarioJson(text))).toBe(text);
    }
  });

  it("preserves doubles exactly through a round trip", () => {
    const scenario = parseScenarioJson(fixtureText("clicks.scenario.json"));
    scenario.entry_exit_pairs[0]!.entry = {
      x: 0.1 + 0.2,
      y: 1e-7,
      bearing_deg: 359.99999999,
    };
    const back = parseScenarioJson(canonicalScenarioJson(scenario));
    expect(back.entry_exit_pairs[0]!.entry.x).toBe(0.1 + 0.2);
    expect(back.entry_exit_pairs[0]!.entry.y).toBe(1e-7);
    expect(back.entry_exit_pairs[0]!.entry.bearing_deg).toBe(359.99999999);
    expect(back).toEqual(scenario);
  });

  it("rejects unknown schema versions", () => {
    expect(() => parseScenarioJson('{"schema_version": 2}')).toThrow(/schema_version/);
    expect(() => parseScenarioJson("[1]")).toThrow();
  });
});

describe("click-built scenario", () => {
  it("matches the hand-written fixture byte for byte", () => {
    const session = new UiSession(new ApiClient(new FakeServer()));
    session.loadImage("site.png");
    session.calibrate([100, 900], [600, 900], 250, 1000);
    session.setName("ui-clicks");

    // entry at the quarry gate, drag due east; exit above it, drag due west
    const entry = session.placeDirectedPoint({ xPx: 0, yPx: 1000 }, { dxPx: 40, dyPx: 0 });
    const exit = session.placeDirectedPoint({ xPx: 0, yPx: 880 }, { dxPx: -40, dyPx: 0 });
    expect(entry).toEqual({ x: 0, y: 0, bearing_deg: 90 });
    expect(exit).toEqual({ x: 0, y: 60, bearing_deg: 270 });
    session.addEntryExitPair("west", entry, exit);

    const front = session.placeDirectedPoint({ xPx: 640, yPx: 980 }, { dxPx: -40, dyPx: 0 });
    const rear = session.placeDirectedPoint({ xPx: 640, yPx: 800 }, { dxPx: -40, dyPx: 0 });
    session.addDumpPoint("front", front);
    session.addDumpPoint("rear", rear);

    expect(session.canonicalJson()).toBe(fixtureText("clicks.scenario.json"));
    expect(session.routeIds()).toEqual(["west:front", "west:rear"]);
  });
});
