"""HTTP service wrapping the solver; the CLI is a thin client of this app.

Run it with `pebbling serve` or point uvicorn at pebbling.service:app.
Usage errors (bad graph text, size mismatches) come back as 400 with a
structured detail; a tripped search cap comes back as 500 with kind
"limit". Endpoint work is pure compute, so responses depend only on the
request body.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import __version__
from .errors import SearchLimitError, UsageError
from .game import Configuration, GoalMode
from .graphs import FAMILIES, Graph, encode_graph6, parse_edge_list, parse_graph6
from .reporting import report_to_dict
from .schemas import (
    GraphSpec,
    HealthResponse,
    SolveRequest,
    SolveResponse,
    ValueRequest,
    ValueResponse,
    VerifyRequest,
    VerifyResponse,
)
from .solver import (
    ExtendedCount,
    find_unsolvable_witness,
    is_infinite,
    pebbling_number,
    singular_pebbling_number,
    solvable,
)
from .verification import run_full_verification


def graph_from_spec(spec: GraphSpec) -> Graph:
    if spec.graph6 is not None:
        return parse_graph6(spec.graph6)
    if spec.edge_list is not None:
        return parse_edge_list(spec.edge_list)
    assert spec.family is not None and spec.n is not None
    return FAMILIES[spec.family](spec.n)


def _value_response(g: Graph, value: ExtendedCount, mode: GoalMode) -> ValueResponse:
    graph6 = encode_graph6(g)
    if is_infinite(value):
        return ValueResponse(graph6=graph6, value="infinite")
    assert isinstance(value, int)
    witness = find_unsolvable_witness(g, value - 1, mode)
    if witness is None:
        return ValueResponse(graph6=graph6, value=value)
    return ValueResponse(
        graph6=graph6,
        value=value,
        witness_config=witness[0].to_text(),
        witness_target=witness[1],
    )


def create_app() -> FastAPI:
    app = FastAPI(
        title="pebbling",
        version=__version__,
        description="Exact solvability, pebbling numbers, and verification sweeps "
        "for small simple graphs.",
    )

    @app.exception_handler(UsageError)
    async def _usage_error(request: Request, exc: UsageError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={"detail": {"kind": "usage", "message": str(exc)}},
        )

    @app.exception_handler(SearchLimitError)
    async def _limit_error(request: Request, exc: SearchLimitError) -> JSONResponse:
        return JSONResponse(
            status_code=500,
            content={"detail": {"kind": "limit", "message": str(exc)}},
        )

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok")

    @app.post("/solve", response_model=SolveResponse)
    def solve_endpoint(req: SolveRequest) -> SolveResponse:
        g = graph_from_spec(req.graph)
        config = Configuration.from_text(req.config)
        result = solvable(g, config, req.target, GoalMode(req.mode))
        witness = (
            [(m.source, m.destination) for m in result.witness]
            if result.witness is not None
            else None
        )
        return SolveResponse(
            solvable=result.solvable,
            witness=witness,
            states_explored=result.states_explored,
        )

    @app.post("/pebbling-number", response_model=ValueResponse)
    def pebbling_number_endpoint(req: ValueRequest) -> ValueResponse:
        g = graph_from_spec(req.graph)
        return _value_response(g, pebbling_number(g), GoalMode.AT_LEAST_ONE)

    @app.post("/singular-pebbling-number", response_model=ValueResponse)
    def singular_pebbling_number_endpoint(req: ValueRequest) -> ValueResponse:
        g = graph_from_spec(req.graph)
        return _value_response(g, singular_pebbling_number(g), GoalMode.EXACTLY_ONE)

    @app.post("/verify", response_model=VerifyResponse)
    def verify_endpoint(req: VerifyRequest) -> VerifyResponse:
        report = run_full_verification(
            req.n_max, t_max=req.t_max, window=req.window, jobs=req.jobs
        )
        return VerifyResponse(**report_to_dict(report))

    return app


app = create_app()
