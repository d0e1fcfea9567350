import { readFileSync } from "node:fs";

import type { ResultSet } from "../src/api.js";
import { parseScenarioJson } from "../src/canonical.js";
import type { Scenario } from "../src/scenario.js";

export function fixtureText(name: string): string {
  return readFileSync(new URL(`./fixtures/${name}`, import.meta.url), "utf8");
}

export function fixtureScenario(name: string): Scenario {
  return parseScenarioJson(fixtureText(name));
}

export function fixtureResult(name: string): ResultSet {
  return JSON.parse(fixtureText(name)) as ResultSet;
}
