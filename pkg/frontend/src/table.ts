// Savings table built from a solve result. Cells are copied verbatim from
// the service payload (String of the JSON value, no rounding, no unit math);
// anything the UI re-derived here could silently disagree with the solver.

import type { ResultSet, VariantCells } from "./api.js";

export const TABLE_COLUMNS = [
  "route",
  "tt_time_s",
  "tt_fuel_l",
  "tt_wear_mm",
  "rev_time_s",
  "rev_fuel_l",
  "rev_wear_mm",
  "saved_time_s",
  "saved_fuel_l",
  "saved_wear_mm",
  "trips_per_year",
  "annual_time_h",
  "annual_fuel_l",
  "annual_wear_mm",
] as const;

export type TableColumn = (typeof TABLE_COLUMNS)[number];

export interface TableRow {
  routeId: string;
  cells: Record<TableColumn, string>;
  issues: string[];
}

function cell(value: number | null | undefined): string {
  return value === null || value === undefined ? "" : String(value);
}

function costCells(variant: VariantCells | null): [string, string, string] {
  if (variant === null) return ["", "", ""];
  return [cell(variant.cost.time_s), cell(variant.cost.fuel_l), cell(variant.cost.tyre_wear_mm)];
}

export function buildSavingsTable(result: ResultSet): TableRow[] {
  return result.routes.map((route) => {
    const [ttTime, ttFuel, ttWear] = costCells(route.with_turntable);
    const [revTime, revFuel, revWear] = costCells(route.without_turntable);
    const s = route.savings;
    return {
      routeId: route.route_id,
      cells: {
        route: route.route_id,
        tt_time_s: ttTime,
        tt_fuel_l: ttFuel,
        tt_wear_mm: ttWear,
        rev_time_s: revTime,
        rev_fuel_l: revFuel,
        rev_wear_mm: revWear,
        saved_time_s: cell(s?.time_per_trip_s),
        saved_fuel_l: cell(s?.fuel_per_trip_l),
        saved_wear_mm: cell(s?.wear_per_trip_mm),
        trips_per_year: cell(s?.trips_per_year),
        annual_time_h: cell(s?.annual_time_h),
        annual_fuel_l: cell(s?.annual_fuel_l),
        annual_wear_mm: cell(s?.annual_wear_mm),
      },
      issues: route.issues.map((i) => `${i.code}: ${i.message}`),
    };
  });
}
