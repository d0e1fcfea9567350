"""Exception types shared across the planners and the scenario service."""


class PlanningError(Exception):
    """Base class for path construction failures."""

    code = "planning_error"


class NoPathExists(PlanningError):
    """No candidate of the requested family reaches the goal."""

    code = "no_path_exists"


class TargetInsideTurningCircle(PlanningError):
    """Point target lies strictly inside both minimum turning circles."""

    code = "target_inside_turning_circle"


class StartTooClose(PlanningError):
    """Approach start is within one turntable diameter of the center."""

    code = "start_too_close"


class ScenarioError(Exception):
    """Scenario file or payload fails validation."""

    code = "invalid_scenario"

    def __init__(self, message: str, errors: list[str] | None = None):
        super().__init__(message)
        self.errors = errors or [message]


class DegenerateCalibration(ScenarioError):
    """Calibration points coincide or the reference distance is not positive."""

    code = "degenerate_calibration"
