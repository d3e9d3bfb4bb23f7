"""Command-line front end.

A thin client over the service layer: by default operations run
in-process; with ``--server URL`` the same request models are POSTed to a
running instance of the FastAPI app.

Exit codes: 0 ok, 1 usage, 2 bad data, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence, Tuple

from pydantic import ValidationError

from .errors import DataError, MatrixCubeError
from .problemdoc import ProblemDocument, parse_document
from .service import ops, schemas

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NUMERIC = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on usage problems, not argparse's 2
        raise UsageError(message)


def _read_document(path: str) -> ProblemDocument:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise DataError(f"cannot read {path}: {exc}") from exc
    return parse_document(text)


def _floats(text: str, what: str) -> List[float]:
    try:
        return [float(v) for v in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"cannot parse {what} {text!r}: expected "
                         "comma-separated numbers") from exc


def _box(text: str) -> List[Tuple[float, float]]:
    out = []
    for chunk in text.split(","):
        parts = chunk.split(":")
        if len(parts) != 2:
            raise UsageError(f"box entry {chunk!r} must look like lo:hi")
        try:
            out.append((float(parts[0]), float(parts[1])))
        except ValueError as exc:
            raise UsageError(f"cannot parse box entry {chunk!r}") from exc
    return out


class _Client:
    """Dispatches requests in-process or to a remote server."""

    _routes = {
        "build": ("/build", schemas.BuildResponse, ops.build),
        "check": ("/check", schemas.CheckResponse, ops.check),
        "min-d": ("/min-d", schemas.MinDResponse, ops.find_min_d),
        "optimize": ("/optimize", schemas.OptimizeResponse, ops.optimize),
        "degree": ("/degree", schemas.DegreeResponse, ops.degree),
        "rz-check": ("/rz-check", schemas.RzCheckResponse, ops.rz_check),
        "trace": ("/trace", schemas.TraceResponse, ops.trace),
    }

    def __init__(self, server: Optional[str]):
        self.server = server.rstrip("/") if server else None

    def call(self, name: str, request):
        path, response_model, local = self._routes[name]
        if self.server is None:
            return local(request)
        import httpx

        resp = httpx.post(self.server + path,
                          json=request.model_dump(exclude_none=True),
                          timeout=600.0)
        if resp.status_code == 422:
            raise DataError(resp.json().get("detail", resp.text))
        if resp.status_code != 200:
            raise MatrixCubeError(f"server error {resp.status_code}: {resp.text}")
        return response_model.model_validate(resp.json())

    def gallery(self, name: str, foci, weights, N) -> ProblemDocument:
        if self.server is None:
            return ops.gallery_document(name, foci=foci, weights=weights, N=N)
        import httpx

        params = {"N": N}
        if foci:
            params["foci"] = foci
        if weights:
            params["weights"] = weights
        resp = httpx.get(f"{self.server}/gallery/{name}", params=params,
                         timeout=60.0)
        if resp.status_code == 422:
            raise DataError(resp.json().get("detail", resp.text))
        if resp.status_code != 200:
            raise MatrixCubeError(f"server error {resp.status_code}: {resp.text}")
        return ProblemDocument.model_validate(resp.json())


def _print_matrix(rows) -> None:
    cells = [[str(v) for v in row] for row in rows]
    width = max((len(c) for row in cells for c in row), default=1)
    for row in cells:
        print("  [" + "  ".join(c.rjust(width) for c in row) + "]")


def build_parser() -> _Parser:
    parser = _Parser(prog="matrixcube",
                     description="LMI representations of eigenvalue-"
                                 "parametrized matrix cube problems")
    parser.add_argument("--tol", type=float, default=None,
                        help="numeric tolerance override")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized subcommands")
    parser.add_argument("--server", default=None,
                        help="base URL of a running matrixcube service; "
                             "default runs in-process")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="print the LMI coefficient matrices")
    p.add_argument("file", help="problem document path, or - for stdin")

    p = sub.add_parser("check", help="membership verdicts at a point")
    p.add_argument("file")
    p.add_argument("--point", required=True, help="x1,...,xn")
    p.add_argument("--d", required=True, type=float)
    p.add_argument("--oracle", choices=["lmi", "vertex", "both"], default="both")

    p = sub.add_parser("min-d", help="smallest feasible d at a point")
    p.add_argument("file")
    p.add_argument("--point", required=True)

    p = sub.add_parser("optimize", help="minimize c.x over a fixed-d slice")
    p.add_argument("file")
    p.add_argument("--c", required=True, help="objective c1,...,cn")
    p.add_argument("--d", required=True, type=float)
    p.add_argument("--box", required=True, help="lo:hi,lo:hi,...")
    p.add_argument("--max-iters", type=int, default=500)

    p = sub.add_parser("degree", help="max determinant degree over random lines")
    p.add_argument("file")
    p.add_argument("--fix-d", default=None,
                   help="fix d to this rational; lines stay in x-space")
    p.add_argument("--lines", type=int, default=5)

    p = sub.add_parser("rz-check", help="real-rootedness along random lines")
    p.add_argument("file")
    p.add_argument("--interior", required=True, help="x1,...,xn,d")
    p.add_argument("--lines", type=int, default=100)

    p = sub.add_parser("trace", help="emit boundary samples as CSV (n = 2)")
    p.add_argument("file")
    p.add_argument("--d", required=True, type=float)
    p.add_argument("--center", required=True, help="x1,x2 interior point")
    p.add_argument("--rays", type=int, default=360)

    p = sub.add_parser("gallery", help="emit a named gallery problem document")
    p.add_argument("name",
                   help="3ellipse | 2ellipse | disk | example-322 | "
                        "m-ellipse | matrix-ellipsoid | diagonal | tilde")
    p.add_argument("--foci", default=None, help="e.g. '0,0;1,0;0,1'")
    p.add_argument("--weights", default=None, help="e.g. '1,2,1'")
    p.add_argument("--N", type=int, default=2,
                   help="matrix size for matrix-ellipsoid")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _run(args) -> int:
    client = _Client(args.server)

    if args.command == "serve":
        import uvicorn

        from .service import app
        uvicorn.run(app, host=args.host, port=args.port)
        return EXIT_OK

    if args.command == "gallery":
        doc = client.gallery(args.name, args.foci, args.weights, args.N)
        print(json.dumps(doc.model_dump(exclude_none=True), indent=2))
        return EXIT_OK

    doc = _read_document(args.file)

    if args.command == "build":
        resp = client.call("build", schemas.BuildRequest(problem=doc))
        print(f"dim: {resp.dim}")
        print(f"nvars: {resp.nvars}")
        print(f"mode: {resp.mode}")
        print("coefficient of 1:")
        _print_matrix(resp.c_const)
        print("coefficient of d:")
        _print_matrix(resp.c_d)
        for i, mat in enumerate(resp.c_x, start=1):
            print(f"coefficient of x{i}:")
            _print_matrix(mat)
        return EXIT_OK

    if args.command == "check":
        req = schemas.CheckRequest(problem=doc, point=_floats(args.point, "--point"),
                                   d=args.d, oracle=args.oracle, tol=args.tol)
        resp = client.call("check", req)
        for label, verdict in (("lmi", resp.lmi), ("vertex", resp.vertex)):
            if verdict is None:
                continue
            line = (f"{label}: {'member' if verdict.member else 'non-member'} "
                    f"(witness eigenvalue {verdict.witness_eigenvalue:.9g})")
            if verdict.witness_vertex:
                line += f" at vertex {','.join(verdict.witness_vertex)}"
            print(line)
        if resp.agree is not None:
            print(f"oracles agree: {resp.agree}")
        return EXIT_OK

    if args.command == "min-d":
        req = schemas.MinDRequest(problem=doc, point=_floats(args.point, "--point"),
                                  tol=args.tol or 1e-6)
        resp = client.call("min-d", req)
        print(f"{resp.min_d:.6f}")
        return EXIT_OK

    if args.command == "optimize":
        req = schemas.OptimizeRequest(
            problem=doc, c=_floats(args.c, "--c"), d=args.d, box=_box(args.box),
            tol=args.tol or 1e-7, max_iters=args.max_iters)
        resp = client.call("optimize", req)
        print(f"status: {resp.status}")
        print(f"x: {','.join(f'{v:.9g}' for v in resp.x)}")
        print(f"d: {resp.d:.9g}")
        print(f"value: {resp.value:.9g}")
        print(f"iterations: {resp.iterations}")
        print(f"final_gap: {resp.final_gap:.3g}")
        return EXIT_OK

    if args.command == "degree":
        req = schemas.DegreeRequest(problem=doc, fix_d=args.fix_d,
                                    lines=args.lines, seed=args.seed)
        resp = client.call("degree", req)
        print(f"degree: {resp.degree}")
        print(f"line degrees: {','.join(str(v) for v in resp.line_degrees)}")
        return EXIT_OK

    if args.command == "rz-check":
        req = schemas.RzCheckRequest(
            problem=doc, interior=_floats(args.interior, "--interior"),
            lines=args.lines, seed=args.seed, tol=args.tol or 1e-7)
        resp = client.call("rz-check", req)
        print(f"all_real: {resp.all_real}")
        print(f"lines_checked: {resp.lines_checked}")
        print(f"max_rel_imag: {resp.max_rel_imag:.3g}")
        return EXIT_OK

    if args.command == "trace":
        req = schemas.TraceRequest(problem=doc, d=args.d,
                                   center=_floats(args.center, "--center"),
                                   rays=args.rays, tol=args.tol or 1e-6)
        resp = client.call("trace", req)
        print("theta,x1,x2")
        for pt in resp.points:
            print(f"{pt.theta:.9g},{pt.x1:.9g},{pt.x2:.9g}")
        return EXIT_OK

    raise UsageError(f"unknown command {args.command!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _run(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DataError, ValidationError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except MatrixCubeError as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
