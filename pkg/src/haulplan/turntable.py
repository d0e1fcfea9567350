"""Approach planning onto a rotating turntable at the dump point.

A turntable accepts the truck from any direction within a half-circle
centered on the direction toward the crusher, which is the reverse of the
heading the truck holds when it drives off. Planning is two-stage: first try
the direct arc-straight paths onto the center and keep the shortest one with
an admissible entry heading; if neither entry is admissible, fall back to
full arc-straight-arc paths onto the two perpendicular entry poses, which
sit exactly on the admissibility boundary and need a quarter-turn of the
table after docking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .dubins import shortest_csc, solve_point_target
from .errors import NoPathExists, StartTooClose, TargetInsideTurningCircle
from .geometry import (
    DirectedPoint,
    PathPlan,
    angular_distance,
    normalize_angle,
)

HALF_PI = math.pi / 2.0

_ENTRY_SLACK = 1e-9


@dataclass(frozen=True)
class TurntableSpec:
    """Geometry and drive rates of one turntable installation."""

    center: tuple[float, float]
    exit_heading: float
    diameter: float = 15.0
    max_angular_speed: float = math.radians(6.0)
    angular_accel: float = math.radians(1.2)

    def __post_init__(self) -> None:
        if self.diameter <= 0.0:
            raise ValueError("turntable diameter must be > 0")
        if self.max_angular_speed <= 0.0 or self.angular_accel <= 0.0:
            raise ValueError("turntable rates must be > 0")
        object.__setattr__(self, "exit_heading", normalize_angle(self.exit_heading))


@dataclass(frozen=True)
class TurntableApproach:
    """A drive onto the table plus the rotation it requires before dumping."""

    plan: PathPlan
    entry_heading: float
    rotation_angle: float
    used_fallback: bool


def admissible_entry(entry_heading: float, exit_heading: float) -> bool:
    """True when the entry heading lies within the accepted half-circle.

    The accepted range spans 90 degrees either side of the direction toward
    the crusher (the reverse of the exit heading), boundary inclusive.
    """
    toward = normalize_angle(exit_heading + math.pi)
    return angular_distance(normalize_angle(entry_heading), toward) <= HALF_PI + _ENTRY_SLACK


def rotation_time(angle: float, spec: TurntableSpec) -> float:
    """Seconds to rotate the table through `angle` from rest to rest.

    Trapezoidal speed profile: angle/w + w/a once the angle is long enough
    to reach full speed, otherwise the triangular 2*sqrt(angle/a).
    """
    if not math.isfinite(angle) or angle < 0.0:
        raise ValueError(f"rotation angle must be >= 0, got {angle!r}")
    if angle == 0.0:
        return 0.0
    w = spec.max_angular_speed
    a = spec.angular_accel
    if angle >= w * w / a:
        return angle / w + w / a
    return 2.0 * math.sqrt(angle / a)


def plan_turntable_approach(
    start: DirectedPoint, spec: TurntableSpec, radius: float
) -> TurntableApproach:
    """Shortest admissible drive from `start` onto the turntable center.

    Stage one tries the direct arc-straight candidates; stage two targets
    the two perpendicular entry poses with arc-straight-arc paths and marks
    the result as a fallback. The start must be at least one table diameter
    from the center.
    """
    cx, cy = spec.center
    if math.hypot(start.x - cx, start.y - cy) < spec.diameter:
        raise StartTooClose(
            f"start {start} is within one diameter ({spec.diameter} m) of the turntable center"
        )

    try:
        direct = solve_point_target(start, spec.center, radius)
    except TargetInsideTurningCircle:
        direct = []

    best = None
    for cand in direct:
        if not admissible_entry(cand.entry_heading, spec.exit_heading):
            continue
        if best is None or cand.total_length < best.total_length:
            best = cand
    if best is not None:
        rotation = angular_distance(best.entry_heading, spec.exit_heading)
        return TurntableApproach(best.plan, best.entry_heading, rotation, False)

    goals = (
        DirectedPoint(cx, cy, spec.exit_heading + HALF_PI),
        DirectedPoint(cx, cy, spec.exit_heading - HALF_PI),
    )
    fallback = None
    for goal in goals:
        try:
            cand = shortest_csc(start, goal, radius)
        except NoPathExists:
            continue
        if fallback is None or cand.total_length < fallback[0].total_length:
            fallback = (cand, goal.heading)
    if fallback is None:
        raise NoPathExists(
            f"no admissible approach from {start} onto the turntable at {spec.center}"
        )
    cand, entry = fallback
    return TurntableApproach(cand.plan, entry, HALF_PI, True)
