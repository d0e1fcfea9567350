"""Single-cusp approaches for dumping without a turntable.

The truck drives forward along an arc-straight-arc prefix, stops at a cusp
(the reverse point), then backs along one final arc into the dump pose. Four
forms are considered: LSL|R, LSR|L, RSL|R and RSR|L, where the letter after
the bar is the reversing arc, written relative to the direction the truck
faces while backing. In every form the arc just before the cusp must sweep
exactly 90 degrees; that constraint is what makes the problem solvable by a
one-dimensional search over the reverse-arc sweep.

For a reverse sweep v, the cusp pose is obtained by playing the reversing
arc forward from the dump pose. The forward prefix to that cusp then follows
from the arc-straight-arc closed form, and the pre-cusp sweep becomes a
scalar function of v whose 90-degree crossings are bracketed on a scan grid
and polished by bisection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .dubins import csc_parameters, shortest_csc
from .errors import NoPathExists
from .geometry import (
    TAU,
    DirectedPoint,
    Direction,
    PathPlan,
    Turn,
    angular_distance,
    arc,
    integrate_path,
    integrate_segment,
    straight,
)

REVERSE_FORMS = ("LSL|R", "LSR|L", "RSL|R", "RSR|L")

HALF_PI = math.pi / 2.0

# Reverse legs longer than this trigger a warning on override replans.
LONG_REVERSE_LIMIT = 200.0

_SCAN_POINTS = 8192
_BISECT_TOL = 1e-13
_ENDPOINT_TOL = 1e-6
# Near-ties between forms resolve toward the later form in REVERSE_FORMS.
_TIE_EPS = 1e-9


@dataclass(frozen=True)
class ReverseApproach:
    """A forward prefix, a cusp, and a reversing suffix into the dump pose.

    Solver outputs keep the 90-degree pre-cusp arc and a single reversing
    arc; override replans relax both (their suffix is a full reversed
    arc-straight-arc) and may raise long_reverse_warning.
    """

    form: str
    plan: PathPlan
    reverse_point: DirectedPoint
    total_length: float
    forward_length: float
    reverse_length: float
    long_reverse_warning: bool = False


def _turn_sign(turn: Turn) -> float:
    return 1.0 if turn is Turn.LEFT else -1.0


def _cusp_pose(dump: DirectedPoint, rev_turn: Turn, sweep: float, radius: float) -> DirectedPoint:
    # The reversing arc is the inverse of the same arc driven forward, so the
    # cusp is the dump pose advanced forward along that arc.
    return integrate_segment(dump, arc(rev_turn, radius, sweep))


def _form_letters(form: str) -> tuple[Turn, Turn, Turn]:
    return Turn(form[0]), Turn(form[2]), Turn(form[4])


def _prefix_parameters(
    start: DirectedPoint, cusp_x, cusp_y, cusp_h, csc_form: str, radius: float
):
    # Normalized CSC parameters from start to an array of cusp poses.
    dx = cusp_x - start.x
    dy = cusp_y - start.y
    theta = np.arctan2(dy, dx)
    d = np.hypot(dx, dy) / radius
    alpha = np.mod(start.heading - theta, TAU)
    beta = np.mod(cusp_h - theta, TAU)
    return csc_parameters(csc_form, alpha, beta, d)


def _solve_form(
    start: DirectedPoint, dump: DirectedPoint, radius: float, form: str
) -> ReverseApproach | None:
    first, second, rev = _form_letters(form)
    csc_form = form[:3]
    rev_sign = _turn_sign(rev)

    # Cusp poses for the whole scan grid, in closed form.
    v = np.linspace(0.0, math.pi, _SCAN_POINTS + 1)
    cx = dump.x - rev_sign * radius * math.sin(dump.heading)
    cy = dump.y + rev_sign * radius * math.cos(dump.heading)
    dh = rev_sign * v
    rx = dump.x - cx
    ry = dump.y - cy
    cusp_x = cx + rx * np.cos(dh) - ry * np.sin(dh)
    cusp_y = cy + rx * np.sin(dh) + ry * np.cos(dh)
    cusp_h = dump.heading + dh

    t, p, q, ok = _prefix_parameters(start, cusp_x, cusp_y, cusp_h, csc_form, radius)
    g = q - HALF_PI

    def eval_g(vv: float) -> float | None:
        cusp = _cusp_pose(dump, rev, vv, radius)
        tt, pp, qq, okk = _prefix_parameters(
            start, np.float64(cusp.x), np.float64(cusp.y), np.float64(cusp.heading),
            csc_form, radius,
        )
        if not bool(okk):
            return None
        return float(qq) - HALF_PI

    roots: list[float] = []
    for i in range(len(v) - 1):
        if not (ok[i] and ok[i + 1]):
            continue
        ga, gb = g[i], g[i + 1]
        if abs(gb - ga) >= math.pi:  # wrap of the pre-cusp sweep, not a crossing
            continue
        if ga == 0.0:
            roots.append(float(v[i]))
            continue
        if ga * gb < 0.0:
            a, b = float(v[i]), float(v[i + 1])
            fa = ga
            for _ in range(80):
                if b - a <= _BISECT_TOL:
                    break
                mid = 0.5 * (a + b)
                fm = eval_g(mid)
                if fm is None:
                    break
                if fm == 0.0:
                    a = b = mid
                    break
                if fa * fm < 0.0:
                    b = mid
                else:
                    a, fa = mid, fm
            else:
                continue
            roots.append(0.5 * (a + b))
    if ok[-1] and g[-1] == 0.0:
        roots.append(float(v[-1]))

    best: ReverseApproach | None = None
    for root in roots:
        cusp = _cusp_pose(dump, rev, root, radius)
        tt, pp, qq, okk = _prefix_parameters(
            start, np.float64(cusp.x), np.float64(cusp.y), np.float64(cusp.heading),
            csc_form, radius,
        )
        if not bool(okk):
            continue
        sweep1, run, sweep2 = float(tt), float(pp) * radius, float(qq)
        if abs(sweep2 - HALF_PI) > 1e-9 or run < 0.0 or not 0.0 <= root <= math.pi:
            continue
        segments = (
            arc(first, radius, sweep1),
            straight(run),
            arc(second, radius, sweep2),
            arc(rev, radius, root, Direction.REVERSE),
        )
        plan = PathPlan(start, segments, form)
        end = integrate_path(plan)
        if end.distance_to(dump) > _ENDPOINT_TOL or angular_distance(end.heading, dump.heading) > 1e-9:
            continue
        candidate = ReverseApproach(
            form=form,
            plan=plan,
            reverse_point=cusp,
            total_length=plan.length,
            forward_length=plan.forward_length,
            reverse_length=plan.reverse_length,
        )
        if best is None or candidate.total_length < best.total_length:
            best = candidate
    return best


def solve_reverse_approach(
    start: DirectedPoint, dump: DirectedPoint, radius: float
) -> ReverseApproach:
    """Shortest one-cusp approach from start to the dump pose.

    Mirror-symmetric placements make two forms tie exactly; near-ties
    (within 1e-9 m) resolve toward the later form in REVERSE_FORMS, which
    keeps the symmetric head-on case on its conventional RSR|L answer.
    Raises NoPathExists when no form admits nonnegative segment lengths
    with a reverse sweep in [0, pi].
    """
    best: ReverseApproach | None = None
    for form in REVERSE_FORMS:
        cand = _solve_form(start, dump, radius, form)
        if cand is not None and (best is None or cand.total_length < best.total_length + _TIE_EPS):
            best = cand
    if best is None:
        raise NoPathExists(
            f"no one-cusp approach from {start} to {dump} at radius {radius}"
        )
    return best


def replan_with_reverse_override(
    start: DirectedPoint,
    reverse_override: DirectedPoint,
    dump: DirectedPoint,
    radius: float,
) -> ReverseApproach:
    """Route through an operator-chosen reverse point.

    Forward: shortest CSC from start to the override pose. Reverse: shortest
    CSC from the dump pose to the override, traversed backward. The 90-degree
    pre-cusp constraint does not apply here, and the reverse leg may be
    arbitrarily long; legs beyond LONG_REVERSE_LIMIT set the warning flag.
    """
    forward = shortest_csc(start, reverse_override, radius)
    backward = shortest_csc(dump, reverse_override, radius)
    suffix = tuple(
        replace(seg, direction=Direction.REVERSE)
        for seg in reversed(backward.plan.segments)
    )
    plan = PathPlan(start, forward.plan.segments + suffix, f"{forward.form}|{backward.form}")
    return ReverseApproach(
        form=plan.form_label,
        plan=plan,
        reverse_point=reverse_override,
        total_length=plan.length,
        forward_length=forward.total_length,
        reverse_length=backward.total_length,
        long_reverse_warning=backward.total_length > LONG_REVERSE_LIMIT,
    )
