"""Stateless HTTP facade over the engine, for the decision workbench UI.

Every request carries its full input; nothing is persisted between
requests, and identical bodies yield identical responses.  Response
bodies are the exact byte sequences the command line emits with
``--format json``.  Structural body problems answer 400, semantically
invalid problems 422, unexpected faults 500 with an opaque id.
"""

from __future__ import annotations

import json
import uuid
from typing import Any, Mapping

from fastapi import FastAPI, Request, Response

from . import __version__, ahp, report
from .errors import InputError, SchemaError, ValidationError
from .gain import evaluate
from .ingest import load_problem, load_scenarios, parse_weights_document
from .sensitivity import breakeven_cost, criteria_weight_crossovers, scenario_table

JSON_MEDIA_TYPE = "application/json; charset=utf-8"


def _json_response(document: dict, status_code: int = 200) -> Response:
    return Response(
        content=report.render_json(document),
        status_code=status_code,
        media_type=JSON_MEDIA_TYPE,
    )


def _error_response(error: InputError, status_code: int) -> Response:
    return _json_response(
        {"error": {"path": error.path, "message": str(error)}},
        status_code=status_code,
    )


async def _body(request: Request) -> Any:
    raw = await request.body()
    try:
        return json.loads(raw)
    except json.JSONDecodeError as error:
        raise SchemaError(f"malformed JSON body: {error}", path="$") from None


def _wrapper(body: Any, extra_key: str) -> tuple[Mapping, Any]:
    if not isinstance(body, Mapping):
        raise SchemaError("expected an object", path="$")
    unknown = set(body) - {"problem", extra_key}
    if unknown:
        raise SchemaError(f"unknown keys {sorted(unknown)}", path="$")
    for key in ("problem", extra_key):
        if key not in body:
            raise SchemaError(f"missing key {key!r}", path="$")
    return body["problem"], body[extra_key]


def create_app(*, cors: bool = True) -> FastAPI:
    """Build the facade; ``cors`` controls permissive cross-origin headers."""
    app = FastAPI(title="archgain", version=__version__, docs_url=None)

    if cors:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=["*"],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.exception_handler(SchemaError)
    async def _schema_error(_request, error: SchemaError):
        return _error_response(error, 400)

    @app.exception_handler(ValidationError)
    async def _validation_error(_request, error: ValidationError):
        return _error_response(error, 422)

    @app.exception_handler(Exception)
    async def _internal_error(_request, _error: Exception):
        return _json_response(
            {"error": {"id": uuid.uuid4().hex, "message": "internal fault"}},
            status_code=500,
        )

    @app.get("/api/health")
    async def health() -> Response:
        return _json_response({"ok": True, "version": __version__})

    @app.post("/api/weights")
    async def weights(request: Request) -> Response:
        matrix = parse_weights_document(await _body(request))
        vector = ahp.derive_weights(matrix)
        ratio = ahp.consistency_ratio(matrix)
        warnings = ahp.advisories(matrix, ratio)
        return _json_response(report.weights_document(vector, ratio, warnings))

    @app.post("/api/evaluate")
    async def evaluate_problem(request: Request) -> Response:
        problem, warnings = load_problem(await _body(request))
        result = evaluate(problem)
        return _json_response(
            report.evaluate_document(problem, result, warnings)
        )

    @app.post("/api/sensitivity/crossover")
    async def crossover(request: Request) -> Response:
        problem, warnings = load_problem(await _body(request))
        scan = criteria_weight_crossovers(problem)
        return _json_response(report.crossover_document(problem, scan, warnings))

    @app.post("/api/sensitivity/scenarios")
    async def scenarios(request: Request) -> Response:
        problem_doc, scenario_list = _wrapper(await _body(request), "scenarios")
        problem, warnings = load_problem(problem_doc)
        rows = scenario_table(
            problem, load_scenarios({"scenarios": scenario_list}, problem)
        )
        return _json_response(report.scenario_document(problem, rows, warnings))

    @app.post("/api/breakeven")
    async def breakeven(request: Request) -> Response:
        problem_doc, architecture = _wrapper(await _body(request), "architecture")
        if not isinstance(architecture, str):
            raise SchemaError("expected a string", path="$.architecture")
        problem, warnings = load_problem(problem_doc)
        result = breakeven_cost(problem, architecture)
        return _json_response(report.breakeven_document(problem, result, warnings))

    return app
