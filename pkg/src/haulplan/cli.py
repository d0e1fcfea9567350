"""Command line front end: validate, solve, or serve scenarios."""

from __future__ import annotations

import argparse
import sys

from .errors import ScenarioError
from .scenario import Scenario, demo_scenario_path, load_scenario
from .solve import DEFAULT_SAMPLE_STEP, result_to_json, solve_scenario
from .svg import render_svg

EXIT_OK = 0
EXIT_INVALID = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="haulplan",
        description="Plan crusher approach routes and compare dump manoeuvres.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_scenario_source(p: argparse.ArgumentParser) -> None:
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--scenario", metavar="PATH", help="scenario JSON file")
        src.add_argument(
            "--demo", action="store_true", help="use the bundled demonstration scenario"
        )

    p_solve = sub.add_parser("solve", help="plan all routes and report costs and savings")
    add_scenario_source(p_solve)
    p_solve.add_argument("--out", metavar="PATH", help="write result JSON here instead of stdout")
    p_solve.add_argument("--svg", metavar="PATH", help="also render the plan view to this file")
    p_solve.add_argument(
        "--sample-step", type=float, default=DEFAULT_SAMPLE_STEP, metavar="METERS",
        help="polyline sampling step (default %(default)s)",
    )

    p_validate = sub.add_parser("validate", help="check a scenario file and list problems")
    add_scenario_source(p_validate)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument(
        "--port", type=int, default=None,
        help="listen port (default HAULPLAN_PORT or 8787)",
    )
    return parser


def _load(args: argparse.Namespace) -> Scenario:
    path = demo_scenario_path() if args.demo else args.scenario
    try:
        return load_scenario(path)
    except OSError as exc:
        raise ScenarioError(f"cannot read scenario file: {exc}") from exc


def _cmd_validate(args: argparse.Namespace) -> int:
    scenario = _load(args)
    problems = scenario.validate()
    if problems:
        for problem in problems:
            print(f"invalid: {problem}", file=sys.stderr)
        return EXIT_INVALID
    print(f"ok: {scenario.name} ({len(scenario.route_ids())} routes)")
    return EXIT_OK


def _cmd_solve(args: argparse.Namespace) -> int:
    scenario = _load(args)
    if args.sample_step <= 0.0:
        raise ScenarioError(f"--sample-step must be > 0, got {args.sample_step}")
    result = solve_scenario(scenario)
    for issue in result.issues:
        print(
            f"warning: {issue.route_id} [{issue.variant}] {issue.code}: {issue.message}",
            file=sys.stderr,
        )
    text = result_to_json(result, args.sample_step)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(result, scenario))
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    from .server import run

    run(host=args.host, port=args.port)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "validate":
            return _cmd_validate(args)
        if args.command == "solve":
            return _cmd_solve(args)
        return _cmd_serve(args)
    except ScenarioError as exc:
        for line in exc.errors:
            print(f"error: {line}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
