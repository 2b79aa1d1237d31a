from __future__ import absolute_import

from .cartan import identify_type, split_cartan, TypeLabel
from .chevalley import chevalley_algebra
from .claims import list_claims, run_claim, run_claims
from .dynkin import (
    decompose_isotypic, embedding_index, module_weights, multi_index,
    rep_dynkin_index)
from .exact import ExactMatrix, Subspace
from .grading import extract_fts, extraspecial_sl2, grading_by
from .liealg import LieAlgebra, Subalgebra, structural_tests
from .report import emit_report
from .rootsys import build_root_system, dual_coxeter_number, weyl_dimension
from .ternary import TernaryAlgebra, check_bsta_axioms, fts_is_simple, \
    trivial_fts
from .tkk import tkk
from .utilities import print_dict
from ._version import __version__

__all__ = [
    "build_root_system",
    "check_bsta_axioms",
    "chevalley_algebra",
    "decompose_isotypic",
    "dual_coxeter_number",
    "embedding_index",
    "emit_report",
    "ExactMatrix",
    "extract_fts",
    "extraspecial_sl2",
    "fts_is_simple",
    "grading_by",
    "identify_type",
    "LieAlgebra",
    "list_claims",
    "module_weights",
    "multi_index",
    "print_dict",
    "rep_dynkin_index",
    "run_claim",
    "run_claims",
    "split_cartan",
    "structural_tests",
    "Subalgebra",
    "Subspace",
    "TernaryAlgebra",
    "tkk",
    "trivial_fts",
    "TypeLabel",
    "weyl_dimension",
]
