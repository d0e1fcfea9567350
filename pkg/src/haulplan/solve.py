"""Route assembly: turn a scenario into costed trips for both variants.

Each entry/exit pair is crossed with each dump point to form a route. For
every route both dump manoeuvres are planned: riding the turntable and
backing in over a cusp. Failures are collected per route and variant, so a
scenario with one impossible pairing still reports the rest.

Serialized results are deterministic: dictionaries are built in a fixed
key order and floats are rounded to six decimals, so the same scenario
always produces byte-identical JSON.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Any

from .costs import CostBreakdown, Savings, TruckParams, compare_and_annualize, trip_cost
from .dubins import shortest_csc
from .errors import PlanningError, ScenarioError
from .geometry import DirectedPoint, PathPlan, sample_path
from .reverse import ReverseApproach, replan_with_reverse_override, solve_reverse_approach
from .scenario import Scenario, heading_to_bearing, route_id_for
from .trips import TripPlan, Variant
from .turntable import TurntableApproach, TurntableSpec, plan_turntable_approach

DEFAULT_SAMPLE_STEP = 2.0
_ROUND = 6


@dataclass(frozen=True)
class SolveIssue:
    """One planning failure, tagged with where it happened."""

    route_id: str
    variant: str
    code: str
    message: str


@dataclass(frozen=True)
class VariantResult:
    variant: Variant
    trip: TripPlan
    cost: CostBreakdown

    @property
    def plans(self) -> tuple[PathPlan, ...]:
        return self.trip.inbound + (self.trip.manoeuvre.plan,) + self.trip.outbound


@dataclass(frozen=True)
class RouteOutcome:
    route_id: str
    with_turntable: VariantResult | None
    without_turntable: VariantResult | None
    savings: Savings | None
    issues: tuple[SolveIssue, ...]


@dataclass(frozen=True)
class SolveResult:
    scenario_name: str
    routes: tuple[RouteOutcome, ...]

    @property
    def issues(self) -> tuple[SolveIssue, ...]:
        return tuple(issue for route in self.routes for issue in route.issues)


def _chain_legs(poses: list[DirectedPoint], radius: float) -> tuple[PathPlan, ...]:
    return tuple(
        shortest_csc(poses[i], poses[i + 1], radius).plan for i in range(len(poses) - 1)
    )


def _plan_variant(
    scenario: Scenario,
    route_id: str,
    variant: Variant,
    entry: DirectedPoint,
    exit_pose: DirectedPoint,
    dump: DirectedPoint,
    params: TruckParams,
) -> TripPlan:
    radius = params.turning_radius
    inbound_poses = [entry] + [
        w.pose.to_pose() for w in scenario.waypoints_for(route_id, "inbound")
    ]
    inbound = _chain_legs(inbound_poses, radius)
    manoeuvre: TurntableApproach | ReverseApproach
    spec: TurntableSpec | None = None
    if variant is Variant.TURNTABLE:
        spec = scenario.turntable.spec_at((dump.x, dump.y), dump.heading)
        manoeuvre = plan_turntable_approach(inbound_poses[-1], spec, radius)
    else:
        override = scenario.override_for(route_id)
        if override is not None:
            manoeuvre = replan_with_reverse_override(
                inbound_poses[-1], override.pose.to_pose(), dump, radius
            )
        else:
            manoeuvre = solve_reverse_approach(inbound_poses[-1], dump, radius)
    # Both manoeuvres leave the truck at the dump pose, pointing out.
    outbound_poses = [dump] + [
        w.pose.to_pose() for w in scenario.waypoints_for(route_id, "outbound")
    ] + [exit_pose]
    outbound = _chain_legs(outbound_poses, radius)
    return TripPlan(
        route_id=route_id,
        variant=variant,
        inbound=inbound,
        manoeuvre=manoeuvre,
        outbound=outbound,
        turntable=spec,
    )


def solve_scenario(scenario: Scenario) -> SolveResult:
    """Plan and cost every route of the scenario in both variants."""
    problems = scenario.validate()
    if problems:
        raise ScenarioError("scenario failed validation", problems)

    params = scenario.truck.to_params()
    routes: list[RouteOutcome] = []
    for pair in scenario.entry_exit_pairs:
        entry = pair.entry.to_pose()
        exit_pose = pair.exit.to_pose()
        for dump_point in scenario.dump_points:
            route_id = route_id_for(pair.label, dump_point.label)
            dump = dump_point.pose.to_pose()
            results: dict[Variant, VariantResult] = {}
            issues: list[SolveIssue] = []
            for variant in (Variant.TURNTABLE, Variant.NO_TURNTABLE):
                try:
                    trip = _plan_variant(
                        scenario, route_id, variant, entry, exit_pose, dump, params
                    )
                    results[variant] = VariantResult(variant, trip, trip_cost(trip, params))
                except PlanningError as exc:
                    issues.append(SolveIssue(route_id, variant.value, exc.code, str(exc)))
            with_tt = results.get(Variant.TURNTABLE)
            without_tt = results.get(Variant.NO_TURNTABLE)
            savings = None
            if with_tt is not None and without_tt is not None:
                ops = scenario.operations
                savings = compare_and_annualize(
                    with_tt.cost, without_tt.cost,
                    ops.trips_per_shift, ops.shifts_per_day, ops.days_per_year,
                )
            routes.append(
                RouteOutcome(route_id, with_tt, without_tt, savings, tuple(issues))
            )
    return SolveResult(scenario_name=scenario.name, routes=tuple(routes))


def _round(value: float) -> float:
    rounded = round(value, _ROUND)
    return rounded + 0.0  # never -0.0


def polyline_of(plans: tuple[PathPlan, ...], step: float) -> list[list[float]]:
    """Sampled centreline across consecutive plans, [x, y] pairs rounded."""
    points: list[list[float]] = []
    for plan in plans:
        for s in sample_path(plan, step):
            pt = [_round(s.x), _round(s.y)]
            if points and points[-1] == pt:
                continue
            points.append(pt)
        end = plan.end()
        pt = [_round(end.x), _round(end.y)]
        if not points or points[-1] != pt:
            points.append(pt)
    return points


def _segments_dict(plans: tuple[PathPlan, ...]) -> list[dict[str, Any]]:
    out: list[dict[str, Any]] = []
    for plan in plans:
        for seg in plan.segments:
            entry: dict[str, Any] = {
                "kind": seg.kind.value,
                "direction": seg.direction.value,
                "length": _round(seg.length),
            }
            if seg.turn is not None:
                entry["turn"] = seg.turn.value
                entry["radius"] = _round(seg.radius)
                entry["sweep"] = _round(seg.sweep)
            out.append(entry)
    return out


def _cost_dict(cost: CostBreakdown) -> dict[str, Any]:
    return {
        "time_s": _round(cost.time),
        "fuel_l": _round(cost.fuel),
        "tyre_wear_mm": _round(cost.tyre_wear),
        "phases": [
            {
                "label": e.label,
                "kind": e.kind.value,
                "direction": e.direction.value if e.direction is not None else None,
                "loaded": e.loaded,
                "duration_s": _round(e.duration),
                "distance_m": _round(e.distance),
                "fuel_l": _round(e.fuel),
                "tyre_wear_mm": _round(e.wear),
            }
            for e in cost.ledger
        ],
    }


def _variant_dict(result: VariantResult, step: float) -> dict[str, Any]:
    trip = result.trip
    manoeuvre = trip.manoeuvre
    if isinstance(manoeuvre, TurntableApproach):
        manoeuvre_info: dict[str, Any] = {
            "type": "turntable",
            "form": manoeuvre.plan.form_label,
            "entry_bearing_deg": _round(heading_to_bearing(manoeuvre.entry_heading)),
            "rotation_deg": _round(math.degrees(manoeuvre.rotation_angle)),
            "used_fallback": manoeuvre.used_fallback,
        }
    else:
        manoeuvre_info = {
            "type": "reverse",
            "form": manoeuvre.form,
            "reverse_point": {
                "x": _round(manoeuvre.reverse_point.x),
                "y": _round(manoeuvre.reverse_point.y),
                "bearing_deg": _round(heading_to_bearing(manoeuvre.reverse_point.heading)),
            },
            "reverse_length_m": _round(manoeuvre.reverse_length),
            "long_reverse_warning": manoeuvre.long_reverse_warning,
        }
    return {
        "variant": trip.variant.value,
        "inbound_length_m": _round(trip.inbound_length),
        "reverse_length_m": _round(trip.reverse_length),
        "outbound_length_m": _round(trip.outbound_length),
        "manoeuvre": manoeuvre_info,
        "cost": _cost_dict(result.cost),
        "polyline": polyline_of(result.plans, step),
        "segments": _segments_dict(result.plans),
    }


def _savings_dict(savings: Savings) -> dict[str, Any]:
    return {
        "time_per_trip_s": _round(savings.time_per_trip),
        "fuel_per_trip_l": _round(savings.fuel_per_trip),
        "wear_per_trip_mm": _round(savings.wear_per_trip),
        "trips_per_year": savings.trips_per_year,
        "annual_time_h": _round(savings.annual_time_hours),
        "annual_fuel_l": _round(savings.annual_fuel),
        "annual_wear_mm": _round(savings.annual_wear),
    }


def result_to_dict(result: SolveResult, sample_step: float = DEFAULT_SAMPLE_STEP) -> dict[str, Any]:
    return {
        "scenario": result.scenario_name,
        "routes": [
            {
                "route_id": route.route_id,
                "with_turntable": (
                    _variant_dict(route.with_turntable, sample_step)
                    if route.with_turntable is not None else None
                ),
                "without_turntable": (
                    _variant_dict(route.without_turntable, sample_step)
                    if route.without_turntable is not None else None
                ),
                "savings": _savings_dict(route.savings) if route.savings is not None else None,
                "issues": [
                    {
                        "route_id": i.route_id,
                        "variant": i.variant,
                        "code": i.code,
                        "message": i.message,
                    }
                    for i in route.issues
                ],
            }
            for route in result.routes
        ],
    }


def result_to_json(result: SolveResult, sample_step: float = DEFAULT_SAMPLE_STEP) -> str:
    return json.dumps(result_to_dict(result, sample_step), indent=2) + "\n"
