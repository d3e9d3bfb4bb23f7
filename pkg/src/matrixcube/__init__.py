"""Eigenvalue-parametrized matrix cubes: LMI construction and analysis."""

from .boundary import (LineRestriction, degree_on_line, det_at,
                       det_factorization_check, rz_line_check)
from .builder import CubeProblem, LmiPencil, apply_A, build_lmi, eval_lmi
from .errors import MatrixCubeError
from .gallery import (EllipseSpec, TildeConstruction, arrow_pencil,
                      diagonal_case_problem, example_322,
                      m_ellipse_problem, matrix_m_ellipsoid_problem,
                      three_ellipse_problem, tilde_problem)
from .oracle import (MembershipVerdict, lmi_membership, psd_check,
                     vertex_membership)
from .pencil import MatrixPencil, block_diag_merge
from .problemdoc import (ProblemDocument, parse_problem, problem_to_document,
                         serialize_problem)
from .solver import Cut, SolveReport, min_d, minimize_linear, separate
from .symmat import (EigenDecomposition, SymMatrix, kron, sym_eigen,
                     tensor_sum, tensor_sum_many)

__version__ = "0.1.0"

__all__ = [
    "CubeProblem", "Cut", "EigenDecomposition", "EllipseSpec",
    "LineRestriction", "LmiPencil", "MatrixCubeError", "MatrixPencil",
    "MembershipVerdict", "ProblemDocument", "SolveReport", "SymMatrix",
    "TildeConstruction", "apply_A", "arrow_pencil", "block_diag_merge",
    "build_lmi", "degree_on_line", "det_at", "det_factorization_check",
    "diagonal_case_problem", "eval_lmi", "example_322", "kron",
    "lmi_membership", "m_ellipse_problem", "matrix_m_ellipsoid_problem",
    "min_d", "minimize_linear", "parse_problem", "problem_to_document",
    "psd_check", "rz_line_check", "separate", "serialize_problem",
    "sym_eigen", "tensor_sum", "tensor_sum_many", "three_ellipse_problem",
    "tilde_problem", "vertex_membership",
]
