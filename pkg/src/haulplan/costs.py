"""Trip timing, fuel burn, and tyre wear for both dump manoeuvres.

Speeds, rates, and durations default to the measured values for a 70 t
articulated dump truck working a crusher pocket. Time comes from piecewise
constant-acceleration profiles, fuel from per-state burn rates, and wear
from per-hour tread loss that accrues whenever the truck is on the clock,
loaded rates applying until tipping finishes.

A trip is costed as phases, not by integrating the path: the path planners
supply distances, and the profile for each leg only needs its boundary
speeds. Trucks cross entry and exit gates at full speed, stop exactly once
to reverse or to ride the turntable, and pull away from rest after tipping.

Acceleration fuel is direction-split but not load-split: the measured burn
while accelerating forward is 361 L/h and reversing 395 L/h regardless of
payload, so the loaded flag only drives tyre wear and the cruise rates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .geometry import Direction
from .trips import TripPlan, Variant
from .turntable import rotation_time

KMH = 1.0 / 3.6
SECONDS_PER_HOUR = 3600.0


class PhaseKind(Enum):
    ACCEL = "accel"
    CRUISE = "cruise"
    DECEL = "decel"
    IDLE = "idle"
    TIPPING = "tipping"
    ROTATE = "rotate"


@dataclass(frozen=True)
class TruckParams:
    """Operating limits and consumption rates (SI units, rates per hour)."""

    max_forward_speed: float = 10.0 * KMH
    max_reverse_speed: float = 2.5 * KMH
    acceleration: float = 0.5
    deceleration: float = 1.8
    tipping_duration: float = 40.0
    turning_radius: float = 28.4
    fuel_cruise_forward: float = 150.0
    fuel_cruise_reverse: float = 205.0
    fuel_accel_forward: float = 361.0
    fuel_accel_reverse: float = 395.0
    fuel_decel_idle: float = 53.7
    fuel_tipping: float = 211.7
    wear_loaded: float = 0.0231
    wear_empty: float = 0.0119

    def __post_init__(self) -> None:
        for name in (
            "max_forward_speed", "max_reverse_speed", "acceleration", "deceleration",
            "tipping_duration", "turning_radius", "fuel_cruise_forward",
            "fuel_cruise_reverse", "fuel_accel_forward", "fuel_accel_reverse",
            "fuel_decel_idle", "fuel_tipping", "wear_loaded", "wear_empty",
        ):
            value = getattr(self, name)
            if not math.isfinite(value) or value <= 0.0:
                raise ValueError(f"{name} must be > 0, got {value!r}")
        if self.max_reverse_speed > self.max_forward_speed:
            raise ValueError("reverse speed cap cannot exceed the forward cap")


@dataclass(frozen=True)
class Phase:
    kind: PhaseKind
    duration: float
    distance: float
    direction: Direction | None
    loaded: bool


@dataclass(frozen=True)
class MotionProfile:
    phases: tuple[Phase, ...]

    @property
    def duration(self) -> float:
        return sum(p.duration for p in self.phases)

    @property
    def distance(self) -> float:
        return sum(p.distance for p in self.phases)


def motion_time(
    distance: float,
    v_max: float,
    accel: float,
    decel: float,
    *,
    start_at_rest: bool = True,
    end_at_rest: bool = True,
    direction: Direction = Direction.FORWARD,
    loaded: bool = True,
) -> MotionProfile:
    """Profile for one leg under a speed cap and accel/decel limits.

    Stop-to-stop legs get the classic trapezoid, collapsing to a triangular
    profile when the distance cannot fit both ramps. A boundary that is not
    a stop is crossed at v_max with no ramp on that side; should a leg be
    shorter than one ramp (never the case at haul scale), the moving
    boundary drops to the highest speed the remaining ramp allows.
    """
    if not math.isfinite(distance) or distance < 0.0:
        raise ValueError(f"distance must be >= 0, got {distance!r}")
    if distance == 0.0:
        return MotionProfile(())

    def phase(kind: PhaseKind, duration: float, dist: float) -> Phase:
        return Phase(kind, duration, dist, direction, loaded)

    d_acc = v_max * v_max / (2.0 * accel)
    d_dec = v_max * v_max / (2.0 * decel)
    phases: list[Phase] = []
    if start_at_rest and end_at_rest:
        if distance >= d_acc + d_dec:
            phases.append(phase(PhaseKind.ACCEL, v_max / accel, d_acc))
            cruise = distance - d_acc - d_dec
            if cruise > 0.0:
                phases.append(phase(PhaseKind.CRUISE, cruise / v_max, cruise))
            phases.append(phase(PhaseKind.DECEL, v_max / decel, d_dec))
        else:
            peak = math.sqrt(2.0 * accel * decel * distance / (accel + decel))
            phases.append(phase(PhaseKind.ACCEL, peak / accel, peak * peak / (2.0 * accel)))
            phases.append(phase(PhaseKind.DECEL, peak / decel, peak * peak / (2.0 * decel)))
    elif start_at_rest:
        if distance >= d_acc:
            phases.append(phase(PhaseKind.ACCEL, v_max / accel, d_acc))
            cruise = distance - d_acc
            if cruise > 0.0:
                phases.append(phase(PhaseKind.CRUISE, cruise / v_max, cruise))
        else:
            peak = math.sqrt(2.0 * accel * distance)
            phases.append(phase(PhaseKind.ACCEL, peak / accel, distance))
    elif end_at_rest:
        if distance >= d_dec:
            cruise = distance - d_dec
            if cruise > 0.0:
                phases.append(phase(PhaseKind.CRUISE, cruise / v_max, cruise))
            phases.append(phase(PhaseKind.DECEL, v_max / decel, d_dec))
        else:
            peak = math.sqrt(2.0 * decel * distance)
            phases.append(phase(PhaseKind.DECEL, peak / decel, distance))
    else:
        phases.append(phase(PhaseKind.CRUISE, distance / v_max, distance))
    return MotionProfile(tuple(phases))


def _fuel_rate(p: Phase, params: TruckParams) -> float:
    if p.kind is PhaseKind.ACCEL:
        if p.direction is Direction.REVERSE:
            return params.fuel_accel_reverse
        return params.fuel_accel_forward
    if p.kind is PhaseKind.CRUISE:
        if p.direction is Direction.REVERSE:
            return params.fuel_cruise_reverse
        return params.fuel_cruise_forward
    if p.kind is PhaseKind.TIPPING:
        return params.fuel_tipping
    # Decel, idle, and table rotation all burn at the low idle rate.
    return params.fuel_decel_idle


def fuel_of(profile: MotionProfile, params: TruckParams) -> float:
    """Litres burned across a profile."""
    return sum(p.duration * _fuel_rate(p, params) / SECONDS_PER_HOUR for p in profile.phases)


def wear_of(profile: MotionProfile, params: TruckParams) -> float:
    """Millimetres of tread lost across a profile; wear never pauses."""
    return sum(
        p.duration * (params.wear_loaded if p.loaded else params.wear_empty) / SECONDS_PER_HOUR
        for p in profile.phases
    )


@dataclass(frozen=True)
class LedgerEntry:
    label: str
    kind: PhaseKind
    direction: Direction | None
    loaded: bool
    duration: float
    distance: float
    fuel: float
    wear: float


@dataclass(frozen=True)
class CostBreakdown:
    time: float
    fuel: float
    tyre_wear: float
    ledger: tuple[LedgerEntry, ...]


def cost_of(profiles: list[tuple[str, MotionProfile]], params: TruckParams) -> CostBreakdown:
    """Fold labelled profiles into totals plus a per-phase ledger."""
    entries: list[LedgerEntry] = []
    for label, profile in profiles:
        for p in profile.phases:
            single = MotionProfile((p,))
            entries.append(
                LedgerEntry(
                    label, p.kind, p.direction, p.loaded, p.duration, p.distance,
                    fuel_of(single, params), wear_of(single, params),
                )
            )
    return CostBreakdown(
        time=sum(e.duration for e in entries),
        fuel=sum(e.fuel for e in entries),
        tyre_wear=sum(e.wear for e in entries),
        ledger=tuple(entries),
    )


def trip_cost(trip: TripPlan, params: TruckParams) -> CostBreakdown:
    """Cost of one full trip from entry gate to exit gate.

    Without a turntable: run in at speed and brake to the cusp, back down
    to the dump pose, tip, then pull away. With one: run in at speed and
    stop on the table, ride the rotation, tip, then pull away along the
    exit heading. Everything before the end of tipping counts as loaded.
    """
    profiles: list[tuple[str, MotionProfile]] = [
        (
            "inbound",
            motion_time(
                trip.inbound_length,
                params.max_forward_speed,
                params.acceleration,
                params.deceleration,
                start_at_rest=not trip.enter_at_speed,
                end_at_rest=True,
            ),
        )
    ]
    if trip.variant is Variant.NO_TURNTABLE:
        profiles.append(
            (
                "reverse",
                motion_time(
                    trip.reverse_length,
                    params.max_reverse_speed,
                    params.acceleration,
                    params.deceleration,
                    direction=Direction.REVERSE,
                ),
            )
        )
    else:
        spin = rotation_time(trip.manoeuvre.rotation_angle, trip.turntable)
        profiles.append(
            ("rotate", MotionProfile((Phase(PhaseKind.ROTATE, spin, 0.0, None, True),)))
        )
    profiles.append(
        ("tipping", MotionProfile((Phase(PhaseKind.TIPPING, params.tipping_duration, 0.0, None, True),)))
    )
    profiles.append(
        (
            "outbound",
            motion_time(
                trip.outbound_length,
                params.max_forward_speed,
                params.acceleration,
                params.deceleration,
                end_at_rest=not trip.exit_at_speed,
                loaded=False,
            ),
        )
    )
    return cost_of(profiles, params)


@dataclass(frozen=True)
class Savings:
    """Per-trip deltas (no-turntable minus turntable) and their annual scale."""

    time_per_trip: float
    fuel_per_trip: float
    wear_per_trip: float
    trips_per_year: int
    annual_time: float
    annual_fuel: float
    annual_wear: float

    @property
    def annual_time_hours(self) -> float:
        return self.annual_time / SECONDS_PER_HOUR


def compare_and_annualize(
    with_turntable: CostBreakdown,
    without_turntable: CostBreakdown,
    trips_per_shift: int = 109,
    shifts_per_day: int = 3,
    days_per_year: int = 365,
) -> Savings:
    """Per-trip savings of the turntable variant, scaled to a year of shifts."""
    trips = trips_per_shift * shifts_per_day * days_per_year
    dt = without_turntable.time - with_turntable.time
    df = without_turntable.fuel - with_turntable.fuel
    dw = without_turntable.tyre_wear - with_turntable.tyre_wear
    return Savings(
        time_per_trip=dt,
        fuel_per_trip=df,
        wear_per_trip=dw,
        trips_per_year=trips,
        annual_time=dt * trips,
        annual_fuel=df * trips,
        annual_wear=dw * trips,
    )
