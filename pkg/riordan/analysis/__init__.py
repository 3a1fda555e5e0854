"""Riordan Kit Analysis - Continued fractions, B-sequences and report export"""

from .jfraction import (
    JFraction,
    jfraction_expand,
    jfraction_eval,
    predicted_jfractions,
    row_sums_series
)
from .bsequence import BSequence, b_sequence
from .export import ReportExporter, rational_text, matrix_to_json, load_matrix_json

__all__ = [
    "JFraction",
    "jfraction_expand",
    "jfraction_eval",
    "predicted_jfractions",
    "row_sums_series",
    "BSequence",
    "b_sequence",
    "ReportExporter",
    "rational_text",
    "matrix_to_json",
    "load_matrix_json"
]
