"""Scenario documents: site calibration, gates, dumps, and truck settings.

A scenario is a versioned JSON document. Positions are meters in the
calibrated world frame (y up, origin at the image's bottom-left) and
headings are compass bearings in degrees, clockwise from north, exactly as
entered; speeds stay in km/h. Values convert to the planners' radians/SI
units only at solve time, so serializing a parsed scenario reproduces the
input fields bit for bit.
"""

from __future__ import annotations

import importlib.resources
import json
import math
from dataclasses import asdict, dataclass, field
from typing import Any

from .costs import KMH, TruckParams
from .errors import DegenerateCalibration, ScenarioError
from .geometry import DirectedPoint, normalize_angle
from .turntable import TurntableSpec

SCHEMA_VERSION = 1

SECTIONS = ("inbound", "outbound")


def bearing_to_heading(bearing_deg: float) -> float:
    """Compass bearing (degrees clockwise from north) to math radians."""
    return normalize_angle(math.radians(90.0 - bearing_deg))


def heading_to_bearing(heading: float) -> float:
    """Math radians to a compass bearing in [0, 360)."""
    return math.degrees(normalize_angle(math.pi / 2.0 - heading))


@dataclass(frozen=True)
class PixelTransform:
    """Uniform image-to-world mapping fixed by two points a known distance apart."""

    scale: float  # meters per pixel
    image_height_px: float

    def to_world(self, px: float, py: float) -> tuple[float, float]:
        return px * self.scale, (self.image_height_px - py) * self.scale

    def to_pixels(self, x: float, y: float) -> tuple[float, float]:
        return x / self.scale, self.image_height_px - y / self.scale


def calibrate(
    p1_px: tuple[float, float],
    p2_px: tuple[float, float],
    distance_m: float,
    image_height_px: float,
) -> PixelTransform:
    """Build the image-to-world transform from one measured span."""
    span = math.hypot(p2_px[0] - p1_px[0], p2_px[1] - p1_px[1])
    if span == 0.0:
        raise DegenerateCalibration("calibration points coincide")
    if not math.isfinite(distance_m) or distance_m <= 0.0:
        raise DegenerateCalibration(f"calibration distance must be > 0, got {distance_m!r}")
    if image_height_px <= 0.0:
        raise DegenerateCalibration("image height must be > 0")
    return PixelTransform(distance_m / span, image_height_px)


@dataclass(frozen=True)
class PosePoint:
    """A world position with a compass bearing, as stored in scenario files."""

    x: float
    y: float
    bearing_deg: float

    def to_pose(self) -> DirectedPoint:
        return DirectedPoint(self.x, self.y, bearing_to_heading(self.bearing_deg))

    @classmethod
    def from_pose(cls, pose: DirectedPoint) -> "PosePoint":
        return cls(pose.x, pose.y, heading_to_bearing(pose.heading))

    def to_dict(self) -> dict[str, float]:
        return {"x": self.x, "y": self.y, "bearing_deg": self.bearing_deg}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "PosePoint":
        return cls(float(data["x"]), float(data["y"]), float(data["bearing_deg"]))


@dataclass(frozen=True)
class Calibration:
    p1_px: tuple[float, float]
    p2_px: tuple[float, float]
    distance_m: float
    image_height_px: float

    def transform(self) -> PixelTransform:
        return calibrate(self.p1_px, self.p2_px, self.distance_m, self.image_height_px)

    def to_dict(self) -> dict[str, Any]:
        return {
            "p1_px": list(self.p1_px),
            "p2_px": list(self.p2_px),
            "distance_m": self.distance_m,
            "image_height_px": self.image_height_px,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Calibration":
        return cls(
            (float(data["p1_px"][0]), float(data["p1_px"][1])),
            (float(data["p2_px"][0]), float(data["p2_px"][1])),
            float(data["distance_m"]),
            float(data["image_height_px"]),
        )


@dataclass(frozen=True)
class TruckConfig:
    """Truck settings in file units (speeds km/h, rates per hour)."""

    max_forward_speed_kmh: float = 10.0
    max_reverse_speed_kmh: float = 2.5
    acceleration_ms2: float = 0.5
    deceleration_ms2: float = 1.8
    tipping_duration_s: float = 40.0
    turning_radius_m: float = 28.4
    fuel_cruise_forward_lph: float = 150.0
    fuel_cruise_reverse_lph: float = 205.0
    fuel_accel_forward_lph: float = 361.0
    fuel_accel_reverse_lph: float = 395.0
    fuel_decel_idle_lph: float = 53.7
    fuel_tipping_lph: float = 211.7
    tyre_wear_loaded_mmph: float = 0.0231
    tyre_wear_empty_mmph: float = 0.0119

    def to_params(self) -> TruckParams:
        return TruckParams(
            max_forward_speed=self.max_forward_speed_kmh * KMH,
            max_reverse_speed=self.max_reverse_speed_kmh * KMH,
            acceleration=self.acceleration_ms2,
            deceleration=self.deceleration_ms2,
            tipping_duration=self.tipping_duration_s,
            turning_radius=self.turning_radius_m,
            fuel_cruise_forward=self.fuel_cruise_forward_lph,
            fuel_cruise_reverse=self.fuel_cruise_reverse_lph,
            fuel_accel_forward=self.fuel_accel_forward_lph,
            fuel_accel_reverse=self.fuel_accel_reverse_lph,
            fuel_decel_idle=self.fuel_decel_idle_lph,
            fuel_tipping=self.fuel_tipping_lph,
            wear_loaded=self.tyre_wear_loaded_mmph,
            wear_empty=self.tyre_wear_empty_mmph,
        )

    def to_dict(self) -> dict[str, float]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "TruckConfig":
        return cls(**{k: float(v) for k, v in data.items()})


@dataclass(frozen=True)
class TurntableConfig:
    diameter_m: float = 15.0
    max_angular_speed_deg_s: float = 6.0
    angular_accel_deg_s2: float = 1.2

    def spec_at(self, center: tuple[float, float], exit_heading: float) -> TurntableSpec:
        return TurntableSpec(
            center=center,
            exit_heading=exit_heading,
            diameter=self.diameter_m,
            max_angular_speed=math.radians(self.max_angular_speed_deg_s),
            angular_accel=math.radians(self.angular_accel_deg_s2),
        )

    def to_dict(self) -> dict[str, float]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "TurntableConfig":
        return cls(**{k: float(v) for k, v in data.items()})


@dataclass(frozen=True)
class Operations:
    trips_per_shift: int = 109
    shifts_per_day: int = 3
    days_per_year: int = 365

    def to_dict(self) -> dict[str, int]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Operations":
        return cls(**{k: int(v) for k, v in data.items()})


@dataclass(frozen=True)
class EntryExitPair:
    label: str
    entry: PosePoint
    exit: PosePoint

    def to_dict(self) -> dict[str, Any]:
        return {"label": self.label, "entry": self.entry.to_dict(), "exit": self.exit.to_dict()}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "EntryExitPair":
        return cls(
            str(data["label"]),
            PosePoint.from_dict(data["entry"]),
            PosePoint.from_dict(data["exit"]),
        )


@dataclass(frozen=True)
class DumpPoint:
    """A dump pose; its bearing is the truck's departure direction."""

    label: str
    pose: PosePoint

    def to_dict(self) -> dict[str, Any]:
        return {"label": self.label, "pose": self.pose.to_dict()}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "DumpPoint":
        return cls(str(data["label"]), PosePoint.from_dict(data["pose"]))


@dataclass(frozen=True)
class Waypoint:
    route_id: str
    section: str
    index: int
    pose: PosePoint

    def to_dict(self) -> dict[str, Any]:
        return {
            "route_id": self.route_id,
            "section": self.section,
            "index": self.index,
            "pose": self.pose.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Waypoint":
        return cls(
            str(data["route_id"]), str(data["section"]), int(data["index"]),
            PosePoint.from_dict(data["pose"]),
        )


@dataclass(frozen=True)
class ReverseOverride:
    route_id: str
    pose: PosePoint

    def to_dict(self) -> dict[str, Any]:
        return {"route_id": self.route_id, "pose": self.pose.to_dict()}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ReverseOverride":
        return cls(str(data["route_id"]), PosePoint.from_dict(data["pose"]))


def route_id_for(pair_label: str, dump_label: str) -> str:
    return f"{pair_label}:{dump_label}"


@dataclass(frozen=True)
class Scenario:
    name: str = "scenario"
    image_ref: str = ""
    calibration: Calibration = field(
        default_factory=lambda: Calibration((0.0, 0.0), (100.0, 0.0), 100.0, 1000.0)
    )
    truck: TruckConfig = field(default_factory=TruckConfig)
    turntable: TurntableConfig = field(default_factory=TurntableConfig)
    operations: Operations = field(default_factory=Operations)
    entry_exit_pairs: tuple[EntryExitPair, ...] = ()
    dump_points: tuple[DumpPoint, ...] = ()
    waypoints: tuple[Waypoint, ...] = ()
    reverse_overrides: tuple[ReverseOverride, ...] = ()

    def route_ids(self) -> list[str]:
        return [
            route_id_for(pair.label, dump.label)
            for pair in self.entry_exit_pairs
            for dump in self.dump_points
        ]

    def waypoints_for(self, route_id: str, section: str) -> list[Waypoint]:
        picked = [
            w for w in self.waypoints if w.route_id == route_id and w.section == section
        ]
        picked.sort(key=lambda w: w.index)
        return picked

    def override_for(self, route_id: str) -> ReverseOverride | None:
        for o in self.reverse_overrides:
            if o.route_id == route_id:
                return o
        return None

    def validate(self) -> list[str]:
        """Collect problems; empty means the scenario is solvable in principle."""
        problems: list[str] = []
        try:
            self.calibration.transform()
        except DegenerateCalibration as exc:
            problems.append(str(exc))
        try:
            self.truck.to_params()
        except ValueError as exc:
            problems.append(str(exc))
        if self.turntable.diameter_m <= 0.0:
            problems.append("turntable diameter must be > 0")
        if self.turntable.max_angular_speed_deg_s <= 0.0 or self.turntable.angular_accel_deg_s2 <= 0.0:
            problems.append("turntable rates must be > 0")
        if min(self.operations.trips_per_shift, self.operations.shifts_per_day,
               self.operations.days_per_year) <= 0:
            problems.append("operations counts must be > 0")
        # An empty scenario is valid: it just yields no routes.
        seen = set()
        for pair in self.entry_exit_pairs:
            if pair.label in seen:
                problems.append(f"duplicate entry/exit label {pair.label!r}")
            seen.add(pair.label)
        seen = set()
        for dump in self.dump_points:
            if dump.label in seen:
                problems.append(f"duplicate dump label {dump.label!r}")
            seen.add(dump.label)
        ids = set(self.route_ids())
        for w in self.waypoints:
            if w.route_id not in ids:
                problems.append(f"waypoint references unknown route {w.route_id!r}")
            if w.section not in SECTIONS:
                problems.append(f"waypoint section must be one of {SECTIONS}, got {w.section!r}")
        for o in self.reverse_overrides:
            if o.route_id not in ids:
                problems.append(f"reverse override references unknown route {o.route_id!r}")
        route_overrides = [o.route_id for o in self.reverse_overrides]
        for rid in set(route_overrides):
            if route_overrides.count(rid) > 1:
                problems.append(f"multiple reverse overrides for route {rid!r}")
        return problems

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema_version": SCHEMA_VERSION,
            "name": self.name,
            "image_ref": self.image_ref,
            "calibration": self.calibration.to_dict(),
            "truck": self.truck.to_dict(),
            "turntable": self.turntable.to_dict(),
            "operations": self.operations.to_dict(),
            "entry_exit_pairs": [p.to_dict() for p in self.entry_exit_pairs],
            "dump_points": [d.to_dict() for d in self.dump_points],
            "waypoints": [w.to_dict() for w in self.waypoints],
            "reverse_overrides": [o.to_dict() for o in self.reverse_overrides],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Scenario":
        if not isinstance(data, dict):
            raise ScenarioError("scenario document must be a JSON object")
        version = data.get("schema_version")
        if version != SCHEMA_VERSION:
            raise ScenarioError(
                f"unsupported schema_version {version!r}, expected {SCHEMA_VERSION}"
            )
        try:
            return cls(
                name=str(data.get("name", "scenario")),
                image_ref=str(data.get("image_ref", "")),
                calibration=Calibration.from_dict(data["calibration"]),
                truck=TruckConfig.from_dict(data.get("truck", {})),
                turntable=TurntableConfig.from_dict(data.get("turntable", {})),
                operations=Operations.from_dict(data.get("operations", {})),
                entry_exit_pairs=tuple(
                    EntryExitPair.from_dict(p) for p in data.get("entry_exit_pairs", [])
                ),
                dump_points=tuple(DumpPoint.from_dict(d) for d in data.get("dump_points", [])),
                waypoints=tuple(Waypoint.from_dict(w) for w in data.get("waypoints", [])),
                reverse_overrides=tuple(
                    ReverseOverride.from_dict(o) for o in data.get("reverse_overrides", [])
                ),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ScenarioError(f"malformed scenario document: {exc}") from exc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Scenario":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ScenarioError(f"scenario is not valid JSON: {exc}") from exc
        return cls.from_dict(data)


def load_scenario(path: str) -> Scenario:
    with open(path, encoding="utf-8") as fh:
        return Scenario.from_json(fh.read())


def save_scenario(scenario: Scenario, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(scenario.to_json())


def demo_scenario_path() -> str:
    """Filesystem path of the bundled demonstration scenario."""
    return str(importlib.resources.files("haulplan").joinpath("fixtures/demo.json"))


def demo_scenario() -> Scenario:
    return load_scenario(demo_scenario_path())
