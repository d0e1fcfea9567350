"""Minimum-length haul route planning around ore crushers.

Plans curvature-bounded truck paths from site gates to crusher dump points,
compares backing in over a cusp against riding a turntable, and scales the
per-trip differences in time, fuel, and tyre wear to a year of operation.
"""

from .costs import (
    CostBreakdown,
    Savings,
    TruckParams,
    compare_and_annualize,
    motion_time,
    trip_cost,
)
from .dubins import shortest_csc, solve_csc, solve_point_target
from .errors import (
    DegenerateCalibration,
    NoPathExists,
    PlanningError,
    ScenarioError,
    StartTooClose,
    TargetInsideTurningCircle,
)
from .geometry import DirectedPoint, PathPlan, PathSegment, sample_path
from .reverse import ReverseApproach, replan_with_reverse_override, solve_reverse_approach
from .scenario import (
    Scenario,
    calibrate,
    demo_scenario,
    demo_scenario_path,
    load_scenario,
    save_scenario,
)
from .solve import SolveResult, result_to_dict, result_to_json, solve_scenario
from .svg import render_svg
from .turntable import TurntableSpec, plan_turntable_approach, rotation_time

__version__ = "0.1.0"

__all__ = [
    "CostBreakdown",
    "Savings",
    "TruckParams",
    "compare_and_annualize",
    "motion_time",
    "trip_cost",
    "shortest_csc",
    "solve_csc",
    "solve_point_target",
    "DegenerateCalibration",
    "NoPathExists",
    "PlanningError",
    "ScenarioError",
    "StartTooClose",
    "TargetInsideTurningCircle",
    "DirectedPoint",
    "PathPlan",
    "PathSegment",
    "sample_path",
    "ReverseApproach",
    "replan_with_reverse_override",
    "solve_reverse_approach",
    "Scenario",
    "calibrate",
    "demo_scenario",
    "demo_scenario_path",
    "load_scenario",
    "save_scenario",
    "SolveResult",
    "result_to_dict",
    "result_to_json",
    "solve_scenario",
    "render_svg",
    "TurntableSpec",
    "plan_turntable_approach",
    "rotation_time",
    "__version__",
]
