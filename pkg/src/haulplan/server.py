"""HTTP service exposing scenario storage, solving, and SVG rendering.

Scenarios live in process memory keyed by server-assigned ids; there is no
persistence across restarts. Every error body carries a machine-readable
code alongside the message, and per-route planning failures never fail the
whole solve: they come back inside the result under `issues`.
"""

from __future__ import annotations

import os
import threading
import uuid
from typing import Any

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .errors import ScenarioError
from .scenario import Scenario
from .solve import DEFAULT_SAMPLE_STEP, result_to_dict, solve_scenario
from .svg import render_svg

DEFAULT_PORT = 8787


class ScenarioStore:
    """Thread-safe in-memory scenario map."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._items: dict[str, Scenario] = {}

    def create(self, scenario: Scenario) -> str:
        scenario_id = uuid.uuid4().hex
        with self._lock:
            self._items[scenario_id] = scenario
        return scenario_id

    def get(self, scenario_id: str) -> Scenario | None:
        with self._lock:
            return self._items.get(scenario_id)

    def replace(self, scenario_id: str, scenario: Scenario) -> bool:
        with self._lock:
            if scenario_id not in self._items:
                return False
            self._items[scenario_id] = scenario
            return True


def _error(status: int, code: str, message: str, **extra: Any) -> JSONResponse:
    body = {"code": code, "message": message}
    body.update(extra)
    return JSONResponse(body, status_code=status)


def _not_found(scenario_id: str) -> JSONResponse:
    return _error(404, "scenario_not_found", f"no scenario with id {scenario_id!r}")


def _parse_scenario(payload: Any) -> Scenario:
    scenario = Scenario.from_dict(payload)
    problems = scenario.validate()
    if problems:
        raise ScenarioError("scenario failed validation", problems)
    return scenario


def create_app(store: ScenarioStore | None = None) -> FastAPI:
    app = FastAPI(title="haulplan", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    scenarios = store if store is not None else ScenarioStore()

    @app.exception_handler(ScenarioError)
    async def scenario_error(_request: Request, exc: ScenarioError) -> JSONResponse:
        return _error(422, exc.code, str(exc), errors=exc.errors)

    @app.post("/scenarios", status_code=201)
    async def create_scenario(payload: dict[str, Any]) -> dict[str, Any]:
        scenario = _parse_scenario(payload)
        scenario_id = scenarios.create(scenario)
        return {"id": scenario_id, "scenario": scenario.to_dict()}

    @app.get("/scenarios/{scenario_id}")
    async def get_scenario(scenario_id: str) -> Any:
        scenario = scenarios.get(scenario_id)
        if scenario is None:
            return _not_found(scenario_id)
        return {"id": scenario_id, "scenario": scenario.to_dict()}

    @app.put("/scenarios/{scenario_id}")
    async def put_scenario(scenario_id: str, payload: dict[str, Any]) -> Any:
        scenario = _parse_scenario(payload)
        if not scenarios.replace(scenario_id, scenario):
            return _not_found(scenario_id)
        return {"id": scenario_id, "scenario": scenario.to_dict()}

    @app.post("/scenarios/{scenario_id}/solve")
    async def solve(scenario_id: str, sample_step: float = DEFAULT_SAMPLE_STEP) -> Any:
        scenario = scenarios.get(scenario_id)
        if scenario is None:
            return _not_found(scenario_id)
        result = solve_scenario(scenario)
        return result_to_dict(result, sample_step)

    @app.get("/scenarios/{scenario_id}/svg")
    async def svg(scenario_id: str) -> Any:
        scenario = scenarios.get(scenario_id)
        if scenario is None:
            return _not_found(scenario_id)
        result = solve_scenario(scenario)
        return Response(render_svg(result, scenario), media_type="image/svg+xml")

    return app


def default_port() -> int:
    raw = os.environ.get("HAULPLAN_PORT", "")
    try:
        return int(raw) if raw else DEFAULT_PORT
    except ValueError:
        return DEFAULT_PORT


def run(host: str = "127.0.0.1", port: int | None = None) -> None:
    import uvicorn

    uvicorn.run(create_app(), host=host, port=default_port() if port is None else port)
