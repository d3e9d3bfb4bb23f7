"""FastAPI application exposing the matrix cube toolbox."""

from __future__ import annotations

from typing import Optional

from fastapi import FastAPI, HTTPException, Query

from ..errors import DataError, MatrixCubeError
from ..problemdoc import ProblemDocument
from . import ops, schemas


def create_app() -> FastAPI:
    app = FastAPI(
        title="matrixcube",
        description="LMI representations of eigenvalue-parametrized matrix "
                    "cube problems: construction, membership, optimization "
                    "and boundary analysis.",
        version="0.1.0",
    )

    def _wrap(fn, req):
        try:
            return fn(req)
        except DataError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        except MatrixCubeError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/build", response_model=schemas.BuildResponse,
              responses={422: {"model": schemas.ErrorResponse}})
    def build(req: schemas.BuildRequest) -> schemas.BuildResponse:
        return _wrap(ops.build, req)

    @app.post("/check", response_model=schemas.CheckResponse)
    def check(req: schemas.CheckRequest) -> schemas.CheckResponse:
        return _wrap(ops.check, req)

    @app.post("/min-d", response_model=schemas.MinDResponse)
    def min_d(req: schemas.MinDRequest) -> schemas.MinDResponse:
        return _wrap(ops.find_min_d, req)

    @app.post("/optimize", response_model=schemas.OptimizeResponse)
    def optimize(req: schemas.OptimizeRequest) -> schemas.OptimizeResponse:
        return _wrap(ops.optimize, req)

    @app.post("/degree", response_model=schemas.DegreeResponse)
    def degree(req: schemas.DegreeRequest) -> schemas.DegreeResponse:
        return _wrap(ops.degree, req)

    @app.post("/rz-check", response_model=schemas.RzCheckResponse)
    def rz_check(req: schemas.RzCheckRequest) -> schemas.RzCheckResponse:
        return _wrap(ops.rz_check, req)

    @app.post("/trace", response_model=schemas.TraceResponse)
    def trace(req: schemas.TraceRequest) -> schemas.TraceResponse:
        return _wrap(ops.trace, req)

    @app.get("/gallery/{name}", response_model=ProblemDocument,
             response_model_exclude_none=True)
    def gallery(name: str,
                foci: Optional[str] = Query(default=None),
                weights: Optional[str] = Query(default=None),
                N: int = Query(default=2, ge=1)) -> ProblemDocument:
        try:
            return ops.gallery_document(name, foci=foci, weights=weights, N=N)
        except DataError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        except MatrixCubeError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc

    return app


app = create_app()
