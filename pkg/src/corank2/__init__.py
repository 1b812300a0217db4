"""Exact computations for corank-2 distributions of maximal Kronecker index.

Modules: ``exact`` (rational linear algebra, Pfaffians, Sturm counts),
``pencil`` (skew pencils and their kernel curves), ``liealg`` (sparse graded
Lie algebras), ``bigraded`` (type-(k,w) algebras and their families),
``sl2rep`` (sl2 modules and the algebras m_k), ``invariants`` (w, i, r) and
``cli``.
"""

from .bigraded import CMatrix, TypeKWFamily, assemble_frame, compare_projective, solve_family
from .liealg import GradedLieAlgebra, Subspace, builtin_model, jacobi_residual, weak_derived_flag
from .pencil import SkewPencil, g1_check, kronecker_index, symbol_pencil, xp_polynomial
from .sl2rep import build_mk, extract_c, irreducible

__version__ = "0.1.0"

__all__ = [
    "CMatrix", "TypeKWFamily", "assemble_frame", "compare_projective", "solve_family",
    "GradedLieAlgebra", "Subspace", "builtin_model", "jacobi_residual", "weak_derived_flag",
    "SkewPencil", "g1_check", "kronecker_index", "symbol_pencil", "xp_polynomial",
    "build_mk", "extract_c", "irreducible",
]
