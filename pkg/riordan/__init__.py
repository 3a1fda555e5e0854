"""
Riordan Kit
===========

Exact-arithmetic toolkit for the Riordan group: truncated rational power
series, a small expression language for g(x) and f(x), group elements and
their matrices, involutions built from pseudo-involutions, and their
continued-fraction and B-sequence analysis.

Quick Start:
    from riordan import RiordanWorkbench, FamilyParams

    bench = RiordanWorkbench(order=20)
    schroeder = bench.family(FamilyParams.of(1, 0, 1))
    print(bench.matrix(schroeder, rows=5).to_rows())
"""

__version__ = "1.0.0"
__license__ = "MIT"

from .workbench import RiordanWorkbench
from .core.config import CONFIG, EngineConfig, OutputFormat, Builtin, Route, ExitCode
from .core.errors import RiordanError, SeriesError, ParseError, CheckFailed
from .core.params import FamilyParams
from .core.series import TruncatedSeries
from .expr.evaluate import evaluate, evaluate_text
from .expr.parser import ExprAst, parse, format_expr
from .group.element import (
    RiordanElement,
    IdentityCheck,
    identity,
    product,
    inverse,
    is_involution,
    is_pseudo_involution,
    bin_element
)
from .group.matrix import TriangleMatrix, matrix, row_sums
from .construct.involution import involution_from
from .construct.orthogonal import OrthoRecurrence, chebyshev_array, ortho_rs_array
from .construct.family import family_rst, family_rst_via_construction, corollary_rt, tilde_closed_forms
from .construct.crossval import CrossValidationReport, cross_validate
from .analysis.jfraction import JFraction, jfraction_expand, jfraction_eval, predicted_jfractions
from .analysis.bsequence import BSequence, b_sequence
from .analysis.export import ReportExporter

__all__ = [
    "RiordanWorkbench",
    "CONFIG",
    "EngineConfig",
    "OutputFormat",
    "Builtin",
    "Route",
    "ExitCode",
    "RiordanError",
    "SeriesError",
    "ParseError",
    "CheckFailed",
    "FamilyParams",
    "TruncatedSeries",
    "evaluate",
    "evaluate_text",
    "ExprAst",
    "parse",
    "format_expr",
    "RiordanElement",
    "IdentityCheck",
    "identity",
    "product",
    "inverse",
    "is_involution",
    "is_pseudo_involution",
    "bin_element",
    "TriangleMatrix",
    "matrix",
    "row_sums",
    "involution_from",
    "OrthoRecurrence",
    "chebyshev_array",
    "ortho_rs_array",
    "family_rst",
    "family_rst_via_construction",
    "corollary_rt",
    "tilde_closed_forms",
    "CrossValidationReport",
    "cross_validate",
    "JFraction",
    "jfraction_expand",
    "jfraction_eval",
    "predicted_jfractions",
    "BSequence",
    "b_sequence",
    "ReportExporter"
]
