import re

from haulplan.scenario import demo_scenario
from haulplan.solve import solve_scenario
from haulplan.svg import render_svg


def _rendered() -> str:
    sc = demo_scenario()
    return render_svg(solve_scenario(sc), sc)


def test_demo_svg_has_one_polyline_per_route_variant():
    svg = _rendered()
    polylines = re.findall(r"<polyline[^>]*>", svg)
    assert len(polylines) == 8
    dashed = [p for p in polylines if "stroke-dasharray" in p]
    solid = [p for p in polylines if "stroke-dasharray" not in p]
    assert len(dashed) == 4  # no-turntable variants
    assert len(solid) == 4


def test_demo_svg_marks_tables_cusps_and_gates():
    svg = _rendered()
    assert svg.startswith("<svg")
    assert svg.rstrip().endswith("</svg>")
    circles = re.findall(r"<circle[^>]*>", svg)
    # two turntable outlines plus one cusp marker per route
    assert len([c for c in circles if 'r="7.5"' in c]) == 2
    assert len(circles) >= 6
    labels = re.findall(r"<text[^>]*>([^<]*)</text>", svg)
    for expected in ("front", "rear", "west", "east"):
        assert any(expected in label for label in labels)


def test_svg_is_deterministic():
    assert _rendered() == _rendered()


def test_svg_polyline_points_are_finite():
    svg = _rendered()
    for points in re.findall(r'points="([^"]*)"', svg):
        for token in points.split():
            x, y = token.split(",")
            float(x), float(y)
