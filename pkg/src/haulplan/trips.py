"""Assembled trip descriptions handed to the cost model."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .geometry import PathPlan
from .reverse import ReverseApproach
from .turntable import TurntableApproach, TurntableSpec


class Variant(Enum):
    TURNTABLE = "turntable"
    NO_TURNTABLE = "no_turntable"


@dataclass(frozen=True)
class TripPlan:
    """One route in one variant: entry run, dump manoeuvre, exit run.

    The inbound legs chain from the entry gate through any inbound
    waypoints and end where the manoeuvre starts; outbound legs run from
    the dump departure pose through outbound waypoints to the exit gate.
    Trucks cross the entry and exit gates at speed unless the flags say
    otherwise; they always stop at the cusp or on the table, and dump
    loaded, returning empty.
    """

    route_id: str
    variant: Variant
    inbound: tuple[PathPlan, ...]
    manoeuvre: TurntableApproach | ReverseApproach
    outbound: tuple[PathPlan, ...]
    turntable: TurntableSpec | None = None
    enter_at_speed: bool = True
    exit_at_speed: bool = True

    def __post_init__(self) -> None:
        if self.variant is Variant.TURNTABLE:
            if not isinstance(self.manoeuvre, TurntableApproach) or self.turntable is None:
                raise ValueError("turntable trips need a TurntableApproach and a TurntableSpec")
        else:
            if not isinstance(self.manoeuvre, ReverseApproach):
                raise ValueError("no-turntable trips need a ReverseApproach")

    @property
    def inbound_length(self) -> float:
        base = sum(p.length for p in self.inbound)
        if self.variant is Variant.TURNTABLE:
            return base + self.manoeuvre.plan.length
        return base + self.manoeuvre.forward_length

    @property
    def reverse_length(self) -> float:
        if self.variant is Variant.TURNTABLE:
            return 0.0
        return self.manoeuvre.reverse_length

    @property
    def outbound_length(self) -> float:
        return sum(p.length for p in self.outbound)
