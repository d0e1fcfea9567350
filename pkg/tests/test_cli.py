import json
import re
import subprocess
import sys

from haulplan.scenario import Scenario, Waypoint, PosePoint, demo_scenario


def _run(*args: str) -> subprocess.CompletedProcess:
    return subprocess.run(
        [sys.executable, "-m", "haulplan", *args],
        capture_output=True,
        text=True,
        timeout=120,
    )


def test_solve_demo_writes_result_json_to_stdout():
    proc = _run("solve", "--demo")
    assert proc.returncode == 0, proc.stderr
    payload = json.loads(proc.stdout)
    assert payload["scenario"] == "crusher-demo"
    assert len(payload["routes"]) == 4
    assert all(r["savings"] is not None for r in payload["routes"])


def test_solve_is_byte_deterministic():
    first = _run("solve", "--demo")
    second = _run("solve", "--demo")
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout


def test_solve_writes_files(tmp_path):
    out = tmp_path / "result.json"
    svg = tmp_path / "plan.svg"
    proc = _run("solve", "--demo", "--out", str(out), "--svg", str(svg))
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout == ""
    payload = json.loads(out.read_text(encoding="utf-8"))
    assert len(payload["routes"]) == 4
    drawing = svg.read_text(encoding="utf-8")
    assert len(re.findall(r"<polyline[^>]*>", drawing)) == 8


def test_validate_demo_is_ok():
    proc = _run("validate", "--demo")
    assert proc.returncode == 0
    assert proc.stdout.startswith("ok: crusher-demo")
    assert "4 routes" in proc.stdout


def test_validate_reports_problems(tmp_path):
    sc = demo_scenario()
    broken = Scenario(
        name=sc.name,
        image_ref=sc.image_ref,
        calibration=sc.calibration,
        truck=sc.truck,
        turntable=sc.turntable,
        operations=sc.operations,
        entry_exit_pairs=sc.entry_exit_pairs,
        dump_points=sc.dump_points,
        waypoints=sc.waypoints + (Waypoint("no:where", "inbound", 0, PosePoint(0, 0, 0)),),
        reverse_overrides=sc.reverse_overrides,
    )
    path = tmp_path / "broken.json"
    path.write_text(broken.to_json(), encoding="utf-8")
    proc = _run("validate", "--scenario", str(path))
    assert proc.returncode == 2
    assert "invalid:" in proc.stderr
    solve = _run("solve", "--scenario", str(path))
    assert solve.returncode == 2
    assert "error:" in solve.stderr


def test_missing_scenario_file_exits_2():
    proc = _run("solve", "--scenario", "/nonexistent/site.json")
    assert proc.returncode == 2
    assert "cannot read scenario file" in proc.stderr


def test_bad_sample_step_exits_2():
    proc = _run("solve", "--demo", "--sample-step", "0")
    assert proc.returncode == 2
    assert "--sample-step" in proc.stderr


def test_scenario_and_demo_are_mutually_exclusive():
    proc = _run("solve", "--demo", "--scenario", "x.json")
    assert proc.returncode == 2
