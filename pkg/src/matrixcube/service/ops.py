"""Service operations: typed request -> response functions.

The FastAPI app and the CLI both call these, so in-process and over-HTTP
behavior stay identical.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import List, Optional

from .. import boundary, builder, gallery, oracle, problemdoc, solver
from ..errors import DataError, NotInteriorError, ZeroPolynomialError
from ..symmat import EXACT, SymMatrix
from ..pencil import MatrixPencil
from . import schemas


def _problem_and_lmi(doc: problemdoc.ProblemDocument):
    prob = problemdoc.document_to_problem(doc)
    return prob, builder.build_lmi(prob)


def build(req: schemas.BuildRequest) -> schemas.BuildResponse:
    prob, lmi = _problem_and_lmi(req.problem)
    return schemas.BuildResponse(
        dim=lmi.dim,
        nvars=lmi.nvars,
        mode=lmi.mode,
        c_const=problemdoc.render_matrix(lmi.c_const),
        c_d=problemdoc.render_matrix(lmi.c_d),
        c_x=[problemdoc.render_matrix(c) for c in lmi.c_x],
    )


def _verdict(v: oracle.MembershipVerdict) -> schemas.Verdict:
    return schemas.Verdict(
        member=v.member,
        witness_eigenvalue=v.witness_eigenvalue,
        witness_vertex=list(v.witness_vertex) if v.witness_vertex else None,
    )


def check(req: schemas.CheckRequest) -> schemas.CheckResponse:
    prob, lmi = _problem_and_lmi(req.problem)
    if len(req.point) != prob.nvars:
        raise DataError(f"point must have {prob.nvars} coordinates")
    out = schemas.CheckResponse()
    if req.oracle in ("lmi", "both"):
        out.lmi = _verdict(oracle.lmi_membership(lmi, req.point, req.d, req.tol))
    if req.oracle in ("vertex", "both"):
        out.vertex = _verdict(oracle.vertex_membership(prob, req.point, req.d, req.tol))
    if out.lmi is not None and out.vertex is not None:
        out.agree = out.lmi.member == out.vertex.member
    return out


def find_min_d(req: schemas.MinDRequest) -> schemas.MinDResponse:
    prob, lmi = _problem_and_lmi(req.problem)
    if len(req.point) != prob.nvars:
        raise DataError(f"point must have {prob.nvars} coordinates")
    return schemas.MinDResponse(min_d=solver.min_d(prob, lmi, req.point, req.tol))


def optimize(req: schemas.OptimizeRequest) -> schemas.OptimizeResponse:
    prob, lmi = _problem_and_lmi(req.problem)
    report = solver.minimize_linear(lmi, req.c, req.d, req.box,
                                    tol=req.tol, max_iters=req.max_iters)
    x, d = report.point
    return schemas.OptimizeResponse(
        status=report.status, x=list(x), d=d, value=report.value,
        iterations=report.iterations, final_gap=report.final_gap)


def _random_rational_vector(rng: random.Random, size: int,
                            nonzero: bool = False) -> List[Fraction]:
    while True:
        vec = [Fraction(rng.randint(-9, 9)) for _ in range(size)]
        if not nonzero or any(v != 0 for v in vec):
            return vec


def degree(req: schemas.DegreeRequest) -> schemas.DegreeResponse:
    prob, lmi = _problem_and_lmi(req.problem)
    if lmi.mode != EXACT:
        raise DataError("degree measurement needs an exact-mode problem "
                        "(integer or rational entries only)")
    rng = random.Random(req.seed)
    fix_d = Fraction(req.fix_d) if req.fix_d is not None else None
    degrees: List[int] = []
    for _ in range(req.lines):
        base = _random_rational_vector(rng, prob.nvars + 1)
        direction = _random_rational_vector(rng, prob.nvars + 1, nonzero=True)
        if fix_d is not None:
            base[-1] = fix_d
            direction[-1] = Fraction(0)
            if all(v == 0 for v in direction):
                direction[0] = Fraction(1)
        try:
            degrees.append(boundary.degree_on_line(lmi, base, direction))
        except ZeroPolynomialError:
            continue
    if not degrees:
        raise ZeroPolynomialError(
            "determinant vanished identically on every sampled line")
    return schemas.DegreeResponse(degree=max(degrees), line_degrees=degrees)


def rz_check(req: schemas.RzCheckRequest) -> schemas.RzCheckResponse:
    prob, lmi = _problem_and_lmi(req.problem)
    if len(req.interior) != prob.nvars + 1:
        raise DataError(f"interior point needs {prob.nvars + 1} coordinates (x..., d)")
    rng = random.Random(req.seed)
    all_real = True
    worst = 0.0
    for _ in range(req.lines):
        direction = [rng.gauss(0.0, 1.0) for _ in range(prob.nvars + 1)]
        ok, roots = boundary.rz_line_check(lmi, req.interior, direction, req.tol)
        all_real = all_real and ok
        for r in roots:
            worst = max(worst, abs(r.imag) / (1.0 + abs(r.real)))
    return schemas.RzCheckResponse(all_real=all_real, lines_checked=req.lines,
                                   max_rel_imag=worst)


def trace(req: schemas.TraceRequest) -> schemas.TraceResponse:
    prob, lmi = _problem_and_lmi(req.problem)
    if prob.nvars != 2:
        raise DataError("trace is only defined for two x-variables")
    if len(req.center) != 2:
        raise DataError("center needs 2 coordinates")
    cx, cy = (float(v) for v in req.center)
    if not oracle.lmi_membership(lmi, [cx, cy], req.d).member:
        raise NotInteriorError("trace center is not a member at the given d")

    def member(x1: float, x2: float) -> bool:
        return oracle.lmi_membership(lmi, [x1, x2], req.d).member

    points: List[schemas.TracePoint] = []
    for j in range(req.rays):
        theta = 2.0 * math.pi * j / req.rays
        ux, uy = math.cos(theta), math.sin(theta)
        t_lo, t_hi = 0.0, 1.0
        while member(cx + t_hi * ux, cy + t_hi * uy):
            t_lo, t_hi = t_hi, 2.0 * t_hi
            if t_hi > 2.0 ** 40:
                raise NotInteriorError(
                    f"the slice appears unbounded along ray {j}")
        while t_hi - t_lo > 1e-9 * max(1.0, t_hi):
            mid = 0.5 * (t_lo + t_hi)
            if member(cx + mid * ux, cy + mid * uy):
                t_lo = mid
            else:
                t_hi = mid
        points.append(schemas.TracePoint(
            theta=theta, x1=cx + t_lo * ux, x2=cy + t_lo * uy))
    return schemas.TraceResponse(points=points)


# -- gallery ---------------------------------------------------------------


def _parse_points(text: str) -> List[List[str]]:
    try:
        return [[c.strip() for c in chunk.split(",")] for chunk in text.split(";")]
    except ValueError as exc:
        raise DataError(f"cannot parse point list {text!r}") from exc


def gallery_document(name: str, foci: Optional[str] = None,
                     weights: Optional[str] = None,
                     N: int = 2) -> problemdoc.ProblemDocument:
    """Named gallery instances, serialized as problem documents."""
    name = name.lower()
    if name in ("3ellipse", "3-ellipse"):
        prob = gallery.three_ellipse_problem()
        return problemdoc.problem_to_document(
            prob, name="3ellipse",
            description="three-focus planar ellipse, foci (0,0), (1,0), (0,1)")
    if name in ("2ellipse", "2-ellipse"):
        spec = gallery.EllipseSpec.of([(0, 0), (1, 0)])
        return problemdoc.problem_to_document(
            gallery.m_ellipse_problem(spec), name="2ellipse",
            description="classical ellipse, foci (0,0) and (1,0)")
    if name in ("1ellipse", "disk"):
        spec = gallery.EllipseSpec.of([(0, 0)])
        return problemdoc.problem_to_document(
            gallery.m_ellipse_problem(spec), name="disk",
            description="single-focus instance: the disk ||x|| <= d")
    if name in ("example-322", "example322"):
        return problemdoc.problem_to_document(
            gallery.example_322(), name="example-322",
            description="worked 2x2x2 instance with its printed 8x8 LMI")
    if name in ("m-ellipse", "ellipse"):
        if foci is None:
            raise DataError("m-ellipse needs --foci like '0,0;1,0;0,1'")
        pts = _parse_points(foci)
        w = _parse_points(weights)[0] if weights else None
        spec = gallery.EllipseSpec.of(pts, weights=w)
        return problemdoc.problem_to_document(
            gallery.m_ellipse_problem(spec), name="m-ellipse")
    if name in ("matrix-ellipsoid", "matrix-m-ellipsoid"):
        if foci is None:
            raise DataError("matrix-ellipsoid needs --foci like '0,0;1,1'")
        pts = _parse_points(foci)
        w = _parse_points(weights)[0] if weights else ["1"] * len(pts)
        if len(w) != len(pts):
            raise DataError("one weight per focus")
        A_list = []
        for wk in w:
            scale = Fraction(wk)
            rows = [[scale if i == j else Fraction(0) for j in range(N)]
                    for i in range(N)]
            A_list.append(SymMatrix.exact(rows))
        spec = gallery.EllipseSpec.of(pts, N=N, A_list=A_list)
        return problemdoc.problem_to_document(
            gallery.matrix_m_ellipsoid_problem(spec), name="matrix-ellipsoid")
    if name == "diagonal":
        A = [SymMatrix.exact([[1, 0], [0, 2]]), SymMatrix.exact([[1, 1], [1, 1]])]
        forms = [[((1, 0), 0), ((0, 1), 0)]]  # B1 = diag(x1, x2)
        return problemdoc.problem_to_document(
            gallery.diagonal_case_problem(A, forms, nvars=2), name="diagonal",
            description="diagonal pencil demo: B1 = diag(x1, x2)")
    if name == "tilde":
        A = [SymMatrix.exact([[1]]), SymMatrix.exact([[1]])]
        B = [MatrixPencil((SymMatrix.exact([[0]]), SymMatrix.exact([[1]])))]
        E = [MatrixPencil((SymMatrix.exact([[1]]), SymMatrix.exact([[1]])))]
        built = gallery.tilde_problem(A, B, E, probe_points=[[0.0], [1.0]])
        return problemdoc.problem_to_document(
            built.problem, name="tilde",
            description="asymmetric-bounds demo: t1 in [x1, x1 + 1]")
    raise DataError(f"unknown gallery name {name!r}")
