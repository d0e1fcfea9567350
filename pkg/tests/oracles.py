"""Independent brute-force references the analytic planners are checked against.

Everything here works on bare (x, y, heading) tuples and rebuilds the
geometry from first principles: arc endpoints come from circle centers, the
connecting straight from a tangent projection, and candidate acceptance
from a lateral-error threshold on a fine sweep grid. Nothing is imported
from the package's planners, so agreement between the two routes is
meaningful.
"""

from __future__ import annotations

import math

import numpy as np

TAU = 2.0 * math.pi
DEG = math.pi / 180.0

CSC_FORMS = ("LSL", "LSR", "RSL", "RSR")
REVERSE_FORMS = ("LSL|R", "LSR|L", "RSL|R", "RSR|L")


def _sign(letter: str) -> float:
    return 1.0 if letter == "L" else -1.0


def _arc_end(x, y, h, s, radius, sweep):
    """Pose after driving a minimum-radius arc forward; vectorized in sweep."""
    cx = x - s * radius * np.sin(h)
    cy = y + s * radius * np.cos(h)
    h1 = h + s * sweep
    return cx + s * radius * np.sin(h1), cy - s * radius * np.cos(h1), h1


def _root_minimum(grid: np.ndarray, res: np.ndarray, lengths: np.ndarray, eval_at) -> float | None:
    """Minimum candidate length over the zeros of a signed closure residual.

    res/lengths are the residual and candidate length on the grid (length
    NaN where the geometry is invalid, e.g. a negative straight). Zeros are
    taken from grid points that are exact and from sign-change brackets
    polished by scalar bisection via eval_at(x) -> (residual, length or
    None), so accepted candidates close the path to machine precision.
    """
    best: float | None = None

    def consider(length: float | None) -> None:
        nonlocal best
        if length is not None and (best is None or length < best):
            best = length

    exact = (np.abs(res) <= 1e-9) & ~np.isnan(lengths)
    if exact.any():
        consider(float(lengths[exact].min()))
    flips = np.nonzero(res[:-1] * res[1:] < 0.0)[0]
    for i in flips:
        lo, hi = float(grid[i]), float(grid[i + 1])
        flo = float(res[i])
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            fm, _ = eval_at(mid)
            if fm == 0.0:
                lo = hi = mid
                break
            if (fm < 0.0) == (flo < 0.0):
                lo, flo = mid, fm
            else:
                hi = mid
        _, ln = eval_at(0.5 * (lo + hi))
        consider(ln)
    return best


def csc_grid_lengths(
    start: tuple[float, float, float],
    goal: tuple[float, float, float],
    radius: float,
    step_deg: float = 0.05,
) -> dict[str, float | None]:
    """Minimum length per CSC form found by sweeping the first arc.

    The first-arc sweep runs a grid; the second-arc sweep is whatever closes
    the heading, and the straight is the tangent gap between the two arc
    endpoints. The gap's lateral offset from the inter-arc heading is the
    closure residual: a form is feasible exactly where it vanishes, and the
    grid brackets those zeros for bisection.
    """
    x0, y0, h0 = start
    xg, yg, hg = goal
    grid = np.arange(0.0, 360.0 + step_deg / 2.0, step_deg) * DEG
    out: dict[str, float | None] = {}
    for form in CSC_FORMS:
        s1, s2 = _sign(form[0]), _sign(form[2])
        c2x = xg - s2 * radius * math.sin(hg)
        c2y = yg + s2 * radius * math.cos(hg)

        def eval_at(t: float) -> tuple[float, float | None]:
            p1x, p1y, h1 = _arc_end(x0, y0, h0, s1, radius, t)
            # Walk the final arc backward from the goal to the straight.
            p2x = c2x + s2 * radius * math.sin(h1)
            p2y = c2y - s2 * radius * math.cos(h1)
            dx, dy = p2x - p1x, p2y - p1y
            lon = dx * math.cos(h1) + dy * math.sin(h1)
            lat = dx * math.sin(h1) - dy * math.cos(h1)
            if lon < -1e-9:
                return lat, None
            q = (s2 * (hg - h1)) % TAU
            return lat, radius * (t + q) + max(lon, 0.0)

        p1x, p1y, h1 = _arc_end(x0, y0, h0, s1, radius, grid)
        p2x = c2x + s2 * radius * np.sin(h1)
        p2y = c2y - s2 * radius * np.cos(h1)
        dx, dy = p2x - p1x, p2y - p1y
        lon = dx * np.cos(h1) + dy * np.sin(h1)
        lat = dx * np.sin(h1) - dy * np.cos(h1)
        q = (s2 * (hg - h1)) % TAU
        lengths = radius * (grid + q) + np.maximum(lon, 0.0)
        lengths[lon < -1e-9] = np.nan
        out[form] = _root_minimum(grid, lat, lengths, eval_at)
    return out


def csc_grid_minimum(start, goal, radius, step_deg: float = 0.05) -> float | None:
    lengths = [v for v in csc_grid_lengths(start, goal, radius, step_deg).values() if v is not None]
    return min(lengths) if lengths else None


def point_target_scan(
    start: tuple[float, float, float],
    target: tuple[float, float],
    radius: float,
    turn: str,
    step_deg: float = 0.01,
    ray_tol: float = 0.02,
) -> dict[str, float] | None:
    """First arc sweep whose tangent ray passes through the target.

    Scans the sweep from zero upward and returns the first grid point whose
    forward ray comes within ray_tol of the target, which is how the
    shortest arc-then-straight reach of a position is defined.
    """
    x0, y0, h0 = start
    tx, ty = target
    s = _sign(turn)
    a = np.arange(0.0, 360.0, step_deg) * DEG
    px, py, h = _arc_end(x0, y0, h0, s, radius, a)
    dx, dy = tx - px, ty - py
    lon = dx * np.cos(h) + dy * np.sin(h)
    lat = np.abs(dx * np.sin(h) - dy * np.cos(h))
    ok = (lat <= ray_tol) & (lon >= 0.0)
    if not ok.any():
        return None
    i = int(np.argmax(ok))
    return {
        "sweep": float(a[i]),
        "straight": float(lon[i]),
        "entry_heading": float(h[i]),
        "length": float(radius * a[i] + lon[i]),
    }


def reverse_grid_lengths(
    start: tuple[float, float, float],
    dump: tuple[float, float, float],
    radius: float,
    step_deg: float = 0.02,
) -> dict[str, float | None]:
    """Minimum length per one-cusp form found by sweeping the reverse arc.

    For each candidate reverse sweep the cusp pose is fixed, the pre-cusp
    arc is pinned at a quarter turn, and the first arc closes the heading,
    so the only residual is the lateral offset of the connecting straight.
    The sweep grid brackets the residual's zeros for bisection.
    """
    x0, y0, h0 = start
    xd, yd, hd = dump
    grid = np.arange(0.0, 180.0 + step_deg / 2.0, step_deg) * DEG
    half_pi = math.pi / 2.0
    out: dict[str, float | None] = {}
    for form in REVERSE_FORMS:
        s1, s2, s3 = _sign(form[0]), _sign(form[2]), _sign(form[4])

        def eval_at(v: float) -> tuple[float, float | None]:
            # Reverse arc run backward: advancing the dump pose forward
            # along the reverse-arc letter lands on the cusp.
            cx, cy, hc = _arc_end(xd, yd, hd, s3, radius, v)
            h1 = hc - s2 * half_pi
            p1x, p1y, _ = _arc_end(x0, y0, h0, s1, radius, (s1 * (h1 - h0)) % TAU)
            c2x = cx - s2 * radius * math.sin(hc)
            c2y = cy + s2 * radius * math.cos(hc)
            p2x = c2x + s2 * radius * math.sin(h1)
            p2y = c2y - s2 * radius * math.cos(h1)
            dx, dy = p2x - p1x, p2y - p1y
            lon = dx * math.cos(h1) + dy * math.sin(h1)
            lat = dx * math.sin(h1) - dy * math.cos(h1)
            if lon < -1e-9 or v > math.pi + 1e-12:
                return lat, None
            t = (s1 * (h1 - h0)) % TAU
            return lat, radius * (t + half_pi + v) + max(lon, 0.0)

        cx, cy, hc = _arc_end(xd, yd, hd, s3, radius, grid)
        h1 = hc - s2 * half_pi
        t = (s1 * (h1 - h0)) % TAU
        p1x, p1y, _ = _arc_end(x0, y0, h0, s1, radius, t)
        c2x = cx - s2 * radius * np.sin(hc)
        c2y = cy + s2 * radius * np.cos(hc)
        p2x = c2x + s2 * radius * np.sin(h1)
        p2y = c2y - s2 * radius * np.cos(h1)
        dx, dy = p2x - p1x, p2y - p1y
        lon = dx * np.cos(h1) + dy * np.sin(h1)
        lat = dx * np.sin(h1) - dy * np.cos(h1)
        lengths = radius * (t + half_pi + grid) + np.maximum(lon, 0.0)
        lengths[lon < -1e-9] = np.nan
        out[form] = _root_minimum(grid, lat, lengths, eval_at)
    return out


def reverse_grid_minimum(start, dump, radius, step_deg: float = 0.02) -> float | None:
    lengths = [
        v for v in reverse_grid_lengths(start, dump, radius, step_deg).values() if v is not None
    ]
    return min(lengths) if lengths else None


def motion_time_numeric(
    distance: float,
    v_max: float,
    accel: float,
    decel: float,
    start_at_rest: bool = True,
    end_at_rest: bool = True,
    dt: float = 1e-3,
) -> float:
    """Step a point mass along the leg and report the elapsed time.

    Brakes exactly when the remaining distance equals the stopping distance
    at the current speed; everything else accelerates toward the cap.
    """
    if distance <= 0.0:
        return 0.0
    v = 0.0 if start_at_rest else v_max
    s = 0.0
    elapsed = 0.0
    # Stop legs run until the speed is dissipated, not merely to the mark;
    # the <=' braking trigger means the stop lands past the mark by at most
    # one cruise step, never short of it.
    while s < distance or (end_at_rest and v > 0.0):
        remaining = distance - s
        if end_at_rest and remaining <= v * v / (2.0 * decel):
            v_next = max(v - decel * dt, 0.0)
        elif v < v_max:
            v_next = min(v + accel * dt, v_max)
        else:
            v_next = v
        s += 0.5 * (v + v_next) * dt
        elapsed += dt
        v = v_next
        if elapsed > 1e5:
            raise RuntimeError("numeric motion integration failed to terminate")
    return elapsed


def rotation_time_numeric(
    angle: float, w_max: float, alpha: float, dt: float = 1e-3
) -> float:
    """Same stepping scheme in the angular domain, rest to rest."""
    if angle <= 0.0:
        return 0.0
    w = 0.0
    a = 0.0
    elapsed = 0.0
    while a < angle or w > 0.0:
        remaining = angle - a
        if remaining <= w * w / (2.0 * alpha):
            w_next = max(w - alpha * dt, 0.0)
        else:
            w_next = min(w + alpha * dt, w_max)
        a += 0.5 * (w + w_next) * dt
        elapsed += dt
        w = w_next
        if elapsed > 1e5:
            raise RuntimeError("numeric rotation integration failed to terminate")
    return elapsed
