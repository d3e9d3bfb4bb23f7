"""Pydantic request/response models for the HTTP service and the CLI."""

from __future__ import annotations

from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from ..problemdoc import Matrix, ProblemDocument


class ApiModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


# -- build -----------------------------------------------------------------

class BuildRequest(ApiModel):
    problem: ProblemDocument


class BuildResponse(ApiModel):
    dim: int
    nvars: int
    mode: Literal["exact", "float"]
    c_const: Matrix
    c_d: Matrix
    c_x: List[Matrix]


# -- membership ------------------------------------------------------------

class Verdict(ApiModel):
    member: bool
    witness_eigenvalue: float
    witness_vertex: Optional[List[str]] = None


class CheckRequest(ApiModel):
    problem: ProblemDocument
    point: List[float]
    d: float
    oracle: Literal["lmi", "vertex", "both"] = "both"
    tol: Optional[float] = Field(default=None, gt=0)


class CheckResponse(ApiModel):
    lmi: Optional[Verdict] = None
    vertex: Optional[Verdict] = None
    agree: Optional[bool] = None


# -- min-d -----------------------------------------------------------------

class MinDRequest(ApiModel):
    problem: ProblemDocument
    point: List[float]
    tol: float = Field(default=1e-6, gt=0)


class MinDResponse(ApiModel):
    min_d: float


# -- optimize --------------------------------------------------------------

class OptimizeRequest(ApiModel):
    problem: ProblemDocument
    c: List[float]
    d: float
    box: List[Tuple[float, float]]
    tol: float = Field(default=1e-7, gt=0)
    max_iters: int = Field(default=500, ge=1)


class OptimizeResponse(ApiModel):
    status: Literal["optimal", "infeasible", "iteration-cap", "box-active"]
    x: List[float]
    d: float
    value: float
    iterations: int
    final_gap: float


# -- degree ----------------------------------------------------------------

class DegreeRequest(ApiModel):
    problem: ProblemDocument
    fix_d: Optional[str] = None  # rational string; lines stay in x-space
    lines: int = Field(default=5, ge=1)
    seed: int = 0


class DegreeResponse(ApiModel):
    degree: int
    line_degrees: List[int]


# -- rz-check --------------------------------------------------------------

class RzCheckRequest(ApiModel):
    problem: ProblemDocument
    interior: List[float]  # (x_1..x_n, d)
    lines: int = Field(default=100, ge=1)
    seed: int = 0
    tol: float = Field(default=1e-7, gt=0)


class RzCheckResponse(ApiModel):
    all_real: bool
    lines_checked: int
    max_rel_imag: float


# -- trace -----------------------------------------------------------------

class TraceRequest(ApiModel):
    problem: ProblemDocument
    d: float
    center: List[float]
    rays: int = Field(default=360, ge=1)
    tol: float = Field(default=1e-6, gt=0)


class TracePoint(ApiModel):
    theta: float
    x1: float
    x2: float


class TraceResponse(ApiModel):
    points: List[TracePoint]


class ErrorResponse(ApiModel):
    detail: str
