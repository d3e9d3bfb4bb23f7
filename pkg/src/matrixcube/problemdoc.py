"""JSON problem documents: the on-disk / on-wire format for cube problems.

Entries may be integers, rational strings like "-3/2", or decimals.  A
document whose entries are all integers or rational strings is loaded in
exact mode; any decimal entry forces float mode.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import List, Optional, Union

import numpy as np
from pydantic import (BaseModel, ConfigDict, Field, StrictFloat, StrictInt,
                      StrictStr, ValidationError)

from .builder import CubeProblem
from .errors import DataError
from .pencil import MatrixPencil
from .symmat import EXACT, FLOAT, SymMatrix

SCHEMA_VERSION = "1"

# strict scalars so JSON true/false cannot masquerade as 1/0
Entry = Union[StrictInt, StrictFloat, StrictStr]
Matrix = List[List[Entry]]


class Metadata(BaseModel):
    model_config = ConfigDict(extra="forbid")
    name: Optional[str] = None
    description: Optional[str] = None


class ProblemDocument(BaseModel):
    """Serialized cube problem; see README for a full example."""

    model_config = ConfigDict(extra="forbid")

    schema_version: str = SCHEMA_VERSION
    n: int = Field(ge=0)
    m: int = Field(ge=0)
    N0: int = Field(ge=1)
    A: List[Matrix]
    B: List[List[Matrix]]
    metadata: Optional[Metadata] = None


def _parse_entry(value: Entry, where: str):
    if isinstance(value, bool):
        raise DataError(f"{where}: booleans are not valid matrix entries")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return value
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise DataError(f"{where}: cannot parse entry {value!r} as a rational") from exc


def _parse_matrix(rows: Matrix, size: int, where: str) -> SymMatrix:
    if len(rows) != size or any(len(r) != size for r in rows):
        raise DataError(f"{where}: expected a {size}x{size} matrix")
    parsed = [[_parse_entry(v, f"{where}[{i}][{j}]") for j, v in enumerate(row)]
              for i, row in enumerate(rows)]
    has_float = any(isinstance(v, float) for row in parsed for v in row)
    for i in range(size):
        for j in range(i + 1, size):
            a, b = parsed[i][j], parsed[j][i]
            if (abs(float(a) - float(b)) > 1e-12 * max(1.0, abs(float(a)))
                    if has_float else a != b):
                raise DataError(
                    f"{where}: asymmetric at ({i},{j}) vs ({j},{i}): {a} != {b}")
    if has_float:
        return SymMatrix.from_float([[float(v) for v in row] for row in parsed])
    return SymMatrix.exact(parsed)


def document_to_problem(doc: ProblemDocument) -> CubeProblem:
    if len(doc.A) != doc.m + 1:
        raise DataError(f"A: expected {doc.m + 1} matrices, got {len(doc.A)}")
    if len(doc.B) != doc.m:
        raise DataError(f"B: expected {doc.m} pencil blocks, got {len(doc.B)}")
    A = [_parse_matrix(rows, doc.N0, f"A[{k}]") for k, rows in enumerate(doc.A)]
    B = []
    for k, block in enumerate(doc.B):
        if len(block) != doc.n + 1:
            raise DataError(
                f"B[{k}]: expected {doc.n + 1} coefficient matrices, got {len(block)}")
        if not block[0]:
            raise DataError(f"B[{k}][0]: empty matrix")
        nk = len(block[0])
        coeffs = [_parse_matrix(rows, nk, f"B[{k}][{j}]")
                  for j, rows in enumerate(block)]
        B.append(MatrixPencil(tuple(coeffs)))
    # a single float entry anywhere forces float mode for the whole problem
    if any(mat.mode == FLOAT for mat in A) or any(p.mode == FLOAT for p in B):
        A = [a.to_float() for a in A]
        B = [p.to_float() for p in B]
    try:
        return CubeProblem.build(nvars=doc.n, A=A, B=B)
    except Exception as exc:
        raise DataError(str(exc)) from exc


def parse_problem(text: str) -> CubeProblem:
    return document_to_problem(parse_document(text))


def parse_document(text: str) -> ProblemDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DataError(f"malformed JSON at line {exc.lineno}, column {exc.colno}: "
                        f"{exc.msg}") from exc
    try:
        return ProblemDocument.model_validate(raw)
    except ValidationError as exc:
        issues = "; ".join(
            f"{'.'.join(str(p) for p in e['loc'])}: {e['msg']}" for e in exc.errors())
        raise DataError(f"invalid problem document: {issues}") from exc


def _render_entry(value) -> Entry:
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value)
        return str(value)
    return float(value)


def render_matrix(mat: SymMatrix) -> Matrix:
    return [[_render_entry(v) for v in row] for row in mat.data]


def problem_to_document(prob: CubeProblem, name: Optional[str] = None,
                        description: Optional[str] = None) -> ProblemDocument:
    metadata = None
    if name or description:
        metadata = Metadata(name=name, description=description)
    return ProblemDocument(
        schema_version=SCHEMA_VERSION,
        n=prob.nvars,
        m=prob.m,
        N0=prob.n0,
        A=[render_matrix(a) for a in prob.A],
        B=[[render_matrix(c) for c in p.coeffs] for p in prob.B],
        metadata=metadata,
    )


def serialize_problem(prob: CubeProblem, name: Optional[str] = None,
                      description: Optional[str] = None) -> str:
    doc = problem_to_document(prob, name=name, description=description)
    return json.dumps(doc.model_dump(exclude_none=True), indent=2) + "\n"
