"""Planar poses, constant-curvature path segments, and path integration.

Angles are radians, measured counterclockwise from +x, and normalized to
[0, 2*pi). Distances are meters. Arc turn letters are relative to the
direction the vehicle is facing, not the direction of travel, so a reverse
segment is the exact inverse of the forward segment with the same letter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

TAU = 2.0 * math.pi

# Exact-geometry tolerances used across the planners.
POS_TOL = 1e-9
ANG_TOL = 1e-12
# Endpoint tolerance for root-found constructions.
ENDPOINT_TOL = 1e-6


class Turn(Enum):
    LEFT = "L"
    RIGHT = "R"


class Direction(Enum):
    FORWARD = "forward"
    REVERSE = "reverse"


class SegmentKind(Enum):
    ARC = "arc"
    STRAIGHT = "straight"


def normalize_angle(angle: float) -> float:
    """Wrap an angle into [0, 2*pi). Rejects NaN and infinities."""
    if not math.isfinite(angle):
        raise ValueError(f"angle must be finite, got {angle!r}")
    a = math.fmod(angle, TAU)
    if a < 0.0:
        a += TAU
    if a >= TAU:  # fmod rounding can land exactly on 2*pi
        a -= TAU
    return a + 0.0  # never -0.0


def angle_difference(a: float, b: float) -> float:
    """Signed difference a - b wrapped to (-pi, pi]."""
    d = normalize_angle(a - b)
    if d > math.pi:
        d -= TAU
    return d


def angular_distance(a: float, b: float) -> float:
    """Unsigned angular separation in [0, pi]."""
    return abs(angle_difference(a, b))


@dataclass(frozen=True)
class DirectedPoint:
    """A position with a facing direction."""

    x: float
    y: float
    heading: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError("position must be finite")
        object.__setattr__(self, "heading", normalize_angle(self.heading))

    def distance_to(self, other: "DirectedPoint") -> float:
        return math.hypot(other.x - self.x, other.y - self.y)


@dataclass(frozen=True)
class PathSegment:
    """One constant-curvature piece: an arc or a straight.

    Arc segments carry turn, radius and sweep; length is radius * sweep.
    Straight segments carry only length. The direction flag says whether
    the vehicle travels the segment forward or in reverse.
    """

    kind: SegmentKind
    direction: Direction
    length: float
    turn: Turn | None = None
    radius: float | None = None
    sweep: float | None = None

    def __post_init__(self) -> None:
        if not math.isfinite(self.length) or self.length < 0.0:
            raise ValueError(f"segment length must be >= 0, got {self.length!r}")
        if self.kind is SegmentKind.ARC:
            if self.turn is None or self.radius is None or self.sweep is None:
                raise ValueError("arc segments need turn, radius and sweep")
            if not math.isfinite(self.radius) or self.radius <= 0.0:
                raise ValueError(f"arc radius must be > 0, got {self.radius!r}")
            if not math.isfinite(self.sweep) or not 0.0 <= self.sweep < TAU:
                raise ValueError(f"arc sweep must lie in [0, 2*pi), got {self.sweep!r}")
            if abs(self.length - self.radius * self.sweep) > 1e-9:
                raise ValueError("arc length must equal radius * sweep")
        else:
            if self.turn is not None or self.radius is not None or self.sweep is not None:
                raise ValueError("straight segments take no arc parameters")


def straight(length: float, direction: Direction = Direction.FORWARD) -> PathSegment:
    return PathSegment(SegmentKind.STRAIGHT, direction, length)


def arc(
    turn: Turn,
    radius: float,
    sweep: float,
    direction: Direction = Direction.FORWARD,
) -> PathSegment:
    return PathSegment(SegmentKind.ARC, direction, radius * sweep, turn, radius, sweep)


@dataclass(frozen=True)
class PathPlan:
    """A start pose plus an ordered run of segments.

    A plan may contain at most one forward-to-reverse transition (the cusp)
    and never switches back to forward after reversing.
    """

    start: DirectedPoint
    segments: tuple[PathSegment, ...]
    form_label: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "segments", tuple(self.segments))
        reversed_yet = False
        for seg in self.segments:
            if seg.direction is Direction.REVERSE:
                reversed_yet = True
            elif reversed_yet:
                raise ValueError("plan switches back to forward after reversing")

    @property
    def length(self) -> float:
        return sum(seg.length for seg in self.segments)

    @property
    def forward_length(self) -> float:
        return sum(s.length for s in self.segments if s.direction is Direction.FORWARD)

    @property
    def reverse_length(self) -> float:
        return sum(s.length for s in self.segments if s.direction is Direction.REVERSE)

    def end(self) -> DirectedPoint:
        return integrate_path(self)


def _advance(pose: DirectedPoint, seg: PathSegment, distance: float) -> DirectedPoint:
    # Pose after travelling `distance` of the segment's arclength.
    sign = 1.0 if seg.direction is Direction.FORWARD else -1.0
    if seg.kind is SegmentKind.STRAIGHT:
        return DirectedPoint(
            pose.x + sign * distance * math.cos(pose.heading),
            pose.y + sign * distance * math.sin(pose.heading),
            pose.heading,
        )
    turn = 1.0 if seg.turn is Turn.LEFT else -1.0
    # Circle center sits at the turn side, perpendicular to the heading.
    cx = pose.x - turn * seg.radius * math.sin(pose.heading)
    cy = pose.y + turn * seg.radius * math.cos(pose.heading)
    dh = turn * sign * seg.sweep * (distance / seg.length) if seg.length > 0.0 else 0.0
    cos_dh = math.cos(dh)
    sin_dh = math.sin(dh)
    rx = pose.x - cx
    ry = pose.y - cy
    return DirectedPoint(
        cx + rx * cos_dh - ry * sin_dh,
        cy + rx * sin_dh + ry * cos_dh,
        pose.heading + dh,
    )


def integrate_segment(pose: DirectedPoint, seg: PathSegment) -> DirectedPoint:
    """Pose after traversing one whole segment from `pose`."""
    return _advance(pose, seg, seg.length)


def integrate_path(plan: PathPlan) -> DirectedPoint:
    """Endpoint pose of a plan, by chaining its segments."""
    pose = plan.start
    for seg in plan.segments:
        pose = integrate_segment(pose, seg)
    return pose


@dataclass(frozen=True)
class SamplePoint:
    x: float
    y: float
    heading: float
    direction: Direction


def sample_path(plan: PathPlan, step: float) -> list[SamplePoint]:
    """Sample a plan at an arclength spacing of at most `step`.

    The first sample is the start pose and the last one coincides with
    integrate_path(plan). Zero-length segments contribute no extra points.
    """
    if not math.isfinite(step) or step <= 0.0:
        raise ValueError(f"step must be > 0, got {step!r}")
    first_dir = plan.segments[0].direction if plan.segments else Direction.FORWARD
    points = [SamplePoint(plan.start.x, plan.start.y, plan.start.heading, first_dir)]
    pose = plan.start
    for seg in plan.segments:
        if seg.length == 0.0:
            pose = integrate_segment(pose, seg)
            continue
        n = max(1, math.ceil(seg.length / step))
        for i in range(1, n + 1):
            p = _advance(pose, seg, seg.length * (i / n))
            points.append(SamplePoint(p.x, p.y, p.heading, seg.direction))
        pose = p
    return points
