"""FastAPI application wrapping the core package.

Infeasible LP outcomes and negative verdicts are results, not HTTP
errors; malformed input maps to 400 and failed mathematical
preconditions to 409.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..errors import InputError, PreconditionError
from . import handlers, schemas

app = FastAPI(
    title="fsts",
    description=(
        "Fractional Steiner triple systems in 3-uniform hypergraphs: "
        "exact pair weightings, LP feasibility certificates, and the "
        "codegree-threshold optimization chain."
    ),
    version=__version__,
)


def _translate(exc: Exception) -> HTTPException:
    if isinstance(exc, PreconditionError):
        return HTTPException(status_code=409, detail=str(exc))
    if isinstance(exc, InputError):
        return HTTPException(status_code=400, detail=str(exc))
    raise exc


@app.get("/healthz")
def healthz() -> dict:
    return {"status": "ok", "version": __version__}


@app.get("/version", response_model=schemas.VersionResponse)
def version() -> schemas.VersionResponse:
    return handlers.handle_version()


@app.post("/hypergraph/summary", response_model=schemas.HypergraphSummary)
def hypergraph_summary(payload: schemas.HypergraphIn) -> schemas.HypergraphSummary:
    try:
        return handlers.summarize(handlers.hypergraph_from_model(payload))
    except (InputError, PreconditionError) as exc:
        raise _translate(exc)


@app.post("/weight", response_model=schemas.WeightResponse)
def weight(payload: schemas.WeightRequest) -> schemas.WeightResponse:
    try:
        return handlers.handle_weight(payload)
    except (InputError, PreconditionError) as exc:
        raise _translate(exc)


@app.post("/lp/solve", response_model=schemas.LpSolveResponse)
def lp_solve(payload: schemas.LpSolveRequest) -> schemas.LpSolveResponse:
    try:
        return handlers.handle_lp_solve(payload)
    except (InputError, PreconditionError) as exc:
        raise _translate(exc)


@app.post("/optimize", response_model=schemas.OptimizeResponse)
def optimize(payload: schemas.OptimizeRequest) -> schemas.OptimizeResponse:
    try:
        return handlers.handle_optimize(payload)
    except (InputError, PreconditionError) as exc:
        raise _translate(exc)


@app.post("/root", response_model=schemas.RootResponse)
def root(payload: schemas.RootRequest) -> schemas.RootResponse:
    try:
        return handlers.handle_root(payload)
    except (InputError, PreconditionError) as exc:
        raise _translate(exc)


@app.post("/verify-chain", response_model=schemas.VerifyChainResponse)
def verify_chain(payload: schemas.VerifyChainRequest) -> schemas.VerifyChainResponse:
    try:
        return handlers.handle_verify_chain(payload)
    except (InputError, PreconditionError) as exc:
        raise _translate(exc)


@app.post("/gen", response_model=schemas.GenResponse)
def gen(payload: schemas.GenRequest) -> schemas.GenResponse:
    try:
        return handlers.handle_gen(payload)
    except (InputError, PreconditionError) as exc:
        raise _translate(exc)


@app.post("/certify/parity", response_model=schemas.CertifyParityResponse)
def certify_parity(payload: schemas.CertifyParityRequest) -> schemas.CertifyParityResponse:
    try:
        return handlers.handle_certify_parity(payload)
    except (InputError, PreconditionError) as exc:
        raise _translate(exc)
