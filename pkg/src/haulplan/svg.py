"""Plan-view SVG rendering of solved routes.

One polyline per route per variant: solid for the turntable path, dashed
for the cusp-and-reverse path, both in the route's colour. Dump points get
their turntable circle, reverse manoeuvres get a cusp marker, and gates get
direction ticks. World axes point east/north, so y flips for SVG.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .scenario import Scenario
from .solve import DEFAULT_SAMPLE_STEP, RouteOutcome, SolveResult, polyline_of

ROUTE_COLORS = ("#c62828", "#2e7d32", "#ef6c00", "#6a1b9a")
MARGIN = 25.0
GATE_TICK = 12.0


class _Frame:
    """World-to-SVG mapping: translate to the margin and flip y."""

    def __init__(self, min_x: float, min_y: float, max_x: float, max_y: float):
        self.min_x = min_x
        self.max_y = max_y
        self.width = (max_x - min_x) + 2 * MARGIN
        self.height = (max_y - min_y) + 2 * MARGIN

    def point(self, x: float, y: float) -> tuple[float, float]:
        return x - self.min_x + MARGIN, self.max_y - y + MARGIN


def _fmt(value: float) -> str:
    return f"{value:.2f}".rstrip("0").rstrip(".")


def _frame_for(result: SolveResult, scenario: Scenario) -> _Frame:
    xs: list[float] = []
    ys: list[float] = []
    for route in result.routes:
        for variant in (route.with_turntable, route.without_turntable):
            if variant is None:
                continue
            for x, y in polyline_of(variant.plans, DEFAULT_SAMPLE_STEP):
                xs.append(x)
                ys.append(y)
    for pair in scenario.entry_exit_pairs:
        for p in (pair.entry, pair.exit):
            xs.append(p.x)
            ys.append(p.y)
    for dump in scenario.dump_points:
        xs.append(dump.pose.x)
        ys.append(dump.pose.y)
    if not xs:
        xs, ys = [0.0], [0.0]
    return _Frame(min(xs), min(ys), max(xs), max(ys))


def _polyline(points: list[list[float]], frame: _Frame, color: str, dashed: bool) -> str:
    coords = " ".join(
        f"{_fmt(px)},{_fmt(py)}" for px, py in (frame.point(x, y) for x, y in points)
    )
    dash = ' stroke-dasharray="6 4"' if dashed else ""
    return (
        f'<polyline points="{coords}" fill="none" stroke="{color}" '
        f'stroke-width="2" stroke-linejoin="round"{dash}/>'
    )


def _route_markers(route: RouteOutcome, frame: _Frame, color: str) -> list[str]:
    parts: list[str] = []
    if route.without_turntable is not None:
        rp = route.without_turntable.trip.manoeuvre.reverse_point
        cx, cy = frame.point(rp.x, rp.y)
        parts.append(
            f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="3" fill="none" '
            f'stroke="{color}" stroke-width="1.5"/>'
        )
    return parts


def _gate_tick(x: float, y: float, heading: float, frame: _Frame, label: str) -> list[str]:
    x0, y0 = frame.point(x, y)
    x1, y1 = frame.point(x + GATE_TICK * math.cos(heading), y + GATE_TICK * math.sin(heading))
    return [
        f'<line x1="{_fmt(x0)}" y1="{_fmt(y0)}" x2="{_fmt(x1)}" y2="{_fmt(y1)}" '
        f'stroke="#37474f" stroke-width="1.5"/>',
        f'<circle cx="{_fmt(x0)}" cy="{_fmt(y0)}" r="2.5" fill="#37474f"/>',
        f'<text x="{_fmt(x0 + 5)}" y="{_fmt(y0 - 5)}" font-size="10" '
        f'fill="#37474f">{escape(label)}</text>',
    ]


def render_svg(result: SolveResult, scenario: Scenario) -> str:
    """Deterministic standalone SVG for a solved scenario."""
    frame = _frame_for(result, scenario)
    body: list[str] = []

    for dump in scenario.dump_points:
        cx, cy = frame.point(dump.pose.x, dump.pose.y)
        r = scenario.turntable.diameter_m / 2.0
        body.append(
            f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r)}" fill="#eceff1" '
            f'stroke="#90a4ae" stroke-width="1"/>'
        )
        body.append(
            f'<text x="{_fmt(cx + r + 3)}" y="{_fmt(cy + 3)}" font-size="10" '
            f'fill="#546e7a">{escape(dump.label)}</text>'
        )

    for i, route in enumerate(result.routes):
        color = ROUTE_COLORS[i % len(ROUTE_COLORS)]
        if route.with_turntable is not None:
            body.append(
                _polyline(
                    polyline_of(route.with_turntable.plans, DEFAULT_SAMPLE_STEP),
                    frame, color, dashed=False,
                )
            )
        if route.without_turntable is not None:
            body.append(
                _polyline(
                    polyline_of(route.without_turntable.plans, DEFAULT_SAMPLE_STEP),
                    frame, color, dashed=True,
                )
            )
        body.extend(_route_markers(route, frame, color))

    for pair in scenario.entry_exit_pairs:
        body.extend(
            _gate_tick(
                pair.entry.x, pair.entry.y, pair.entry.to_pose().heading,
                frame, f"{pair.label} in",
            )
        )
        body.extend(
            _gate_tick(
                pair.exit.x, pair.exit.y, pair.exit.to_pose().heading,
                frame, f"{pair.label} out",
            )
        )

    inner = "\n  ".join(body)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="0 0 {_fmt(frame.width)} {_fmt(frame.height)}" '
        f'width="{_fmt(frame.width)}" height="{_fmt(frame.height)}">\n'
        f'  <rect width="100%" height="100%" fill="#fafafa"/>\n'
        f"  {inner}\n"
        f"</svg>\n"
    )
