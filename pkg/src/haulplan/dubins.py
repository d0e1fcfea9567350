"""Forward-only shortest path candidates between directed points.

Covers the four arc-straight-arc forms (LSL, LSR, RSL, RSR) plus the two
arc-straight forms (LS, RS) that target a position without a goal heading.
The arc-arc-arc forms are intentionally out of scope: they only win for
start/goal pairs closer together than anything a haul road layout produces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NoPathExists, TargetInsideTurningCircle
from .geometry import (
    TAU,
    DirectedPoint,
    PathPlan,
    Turn,
    arc,
    normalize_angle,
    straight,
)

CSC_FORMS = ("LSL", "LSR", "RSL", "RSR")

# Sweeps within this distance of a full circle collapse to zero: the endpoint
# is identical and the shorter path is always preferable.
_SWEEP_SNAP = 1e-9
# Tolerance on the squared normalized straight length at existence boundaries.
_EXIST_EPS = 1e-12


@dataclass(frozen=True)
class DubinsCandidate:
    """One arc-straight-arc path; segments may be degenerate (zero length)."""

    form: str
    plan: PathPlan
    total_length: float


@dataclass(frozen=True)
class PointTargetCandidate:
    """One arc-straight path to a position-only target.

    The heading at the target is unconstrained; entry_heading reports it.
    """

    form: str
    plan: PathPlan
    total_length: float
    entry_heading: float


def _mod_tau(x):
    out = np.mod(x, TAU)
    return np.where(out >= TAU, 0.0, out)


def csc_parameters(form: str, alpha, beta, d):
    """Normalized (first sweep, straight, second sweep, valid) for one form.

    Works elementwise on scalars or numpy arrays. alpha/beta are the start
    and goal headings measured from the start-to-goal direction, d is the
    separation in turning-radius units. Invalid geometries are flagged via
    the boolean mask; their numeric outputs are meaningless.
    """
    sa, ca = np.sin(alpha), np.cos(alpha)
    sb, cb = np.sin(beta), np.cos(beta)
    c_ab = np.cos(np.asarray(alpha) - np.asarray(beta))
    if form == "LSL":
        p_sq = 2.0 + d * d - 2.0 * c_ab + 2.0 * d * (sa - sb)
        ok = p_sq > -_EXIST_EPS
        p = np.sqrt(np.maximum(p_sq, 0.0))
        tmp = np.arctan2(cb - ca, d + sa - sb)
        t = _mod_tau(-alpha + tmp)
        q = _mod_tau(beta - tmp)
    elif form == "RSR":
        p_sq = 2.0 + d * d - 2.0 * c_ab + 2.0 * d * (sb - sa)
        ok = p_sq > -_EXIST_EPS
        p = np.sqrt(np.maximum(p_sq, 0.0))
        tmp = np.arctan2(ca - cb, d - sa + sb)
        t = _mod_tau(alpha - tmp)
        q = _mod_tau(-beta + tmp)
    elif form == "LSR":
        p_sq = -2.0 + d * d + 2.0 * c_ab + 2.0 * d * (sa + sb)
        ok = p_sq > -_EXIST_EPS
        p = np.sqrt(np.maximum(p_sq, 0.0))
        tmp = np.arctan2(-ca - cb, d + sa + sb) - np.arctan2(-2.0, p)
        t = _mod_tau(-alpha + tmp)
        q = _mod_tau(-beta + tmp)
    elif form == "RSL":
        p_sq = d * d - 2.0 + 2.0 * c_ab - 2.0 * d * (sa + sb)
        ok = p_sq > -_EXIST_EPS
        p = np.sqrt(np.maximum(p_sq, 0.0))
        tmp = np.arctan2(ca + cb, d - sa - sb) - np.arctan2(2.0, p)
        t = _mod_tau(alpha - tmp)
        q = _mod_tau(beta - tmp)
    else:
        raise ValueError(f"unknown form {form!r}")
    return t, p, q, ok


def _snap_sweep(sweep: float) -> float:
    if sweep >= TAU or TAU - sweep < _SWEEP_SNAP:
        return 0.0
    return sweep


def _require_radius(radius: float) -> None:
    if not math.isfinite(radius) or radius <= 0.0:
        raise ValueError(f"turning radius must be > 0, got {radius!r}")


def solve_csc(start: DirectedPoint, goal: DirectedPoint, radius: float) -> list[DubinsCandidate]:
    """All existing arc-straight-arc candidates from start to goal.

    Returns zero to four candidates in fixed form order. The cross forms
    (LSR, RSL) exist only when the relevant circle centers are at least one
    diameter apart; equality gives a zero-length straight.
    """
    _require_radius(radius)
    dx = goal.x - start.x
    dy = goal.y - start.y
    theta = math.atan2(dy, dx)
    d = math.hypot(dx, dy) / radius
    alpha = normalize_angle(start.heading - theta)
    beta = normalize_angle(goal.heading - theta)

    candidates = []
    for form in CSC_FORMS:
        t, p, q, ok = csc_parameters(form, alpha, beta, d)
        if not bool(ok):
            continue
        sweep1 = _snap_sweep(float(t))
        sweep2 = _snap_sweep(float(q))
        segments = (
            arc(Turn(form[0]), radius, sweep1),
            straight(float(p) * radius),
            arc(Turn(form[2]), radius, sweep2),
        )
        plan = PathPlan(start, segments, form)
        total = sum(seg.length for seg in segments)
        candidates.append(DubinsCandidate(form, plan, total))
    return candidates


def shortest_csc(start: DirectedPoint, goal: DirectedPoint, radius: float) -> DubinsCandidate:
    """Shortest CSC candidate; ties resolve in fixed form order."""
    best = None
    for cand in solve_csc(start, goal, radius):
        if best is None or cand.total_length < best.total_length:
            best = cand
    if best is None:
        raise NoPathExists(
            f"no arc-straight-arc path from {start} to {goal} at radius {radius}"
        )
    return best


def solve_point_target(
    start: DirectedPoint, target: tuple[float, float], radius: float
) -> list[PointTargetCandidate]:
    """Arc-straight candidates from a pose to a position-only target.

    The vehicle turns along its left or right minimum circle through the
    smallest nonnegative sweep whose exit tangent points at the target, then
    drives straight onto it. A side is skipped when the target lies inside
    that side's turning circle; if both sides fail the target is unreachable
    at this radius.
    """
    _require_radius(radius)
    tx, ty = target
    candidates = []
    for form, turn, sign in (("LS", Turn.LEFT, 1.0), ("RS", Turn.RIGHT, -1.0)):
        cx = start.x - sign * radius * math.sin(start.heading)
        cy = start.y + sign * radius * math.cos(start.heading)
        rho = math.hypot(tx - cx, ty - cy)
        if rho < radius - 1e-9:
            continue
        psi = math.atan2(ty - cy, tx - cx)
        ratio = min(1.0, radius / rho) if rho > 0.0 else 1.0
        phi = psi - sign * math.acos(ratio)
        phi0 = start.heading - sign * (math.pi / 2.0)
        sweep = _snap_sweep(normalize_angle(sign * (phi - phi0)))
        run = math.sqrt(max(rho * rho - radius * radius, 0.0))
        entry = normalize_angle(phi + sign * (math.pi / 2.0))
        plan = PathPlan(start, (arc(turn, radius, sweep), straight(run)), form)
        total = plan.length
        candidates.append(PointTargetCandidate(form, plan, total, entry))
    if not candidates:
        raise TargetInsideTurningCircle(
            f"target {target} lies inside both turning circles of {start}"
        )
    return candidates
