"""
Riordan Kit - Workbench
=======================

Unified interface over the subsystems, working at one truncation order:
- expression text to series and Riordan elements
- group operations, matrices and predicates
- involution constructions and the (r, s, t) family
- continued fractions, B-sequences and route cross-validation
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .analysis.bsequence import BSequence, b_sequence
from .analysis.jfraction import JFraction, jfraction_expand
from .construct.crossval import CrossValidationReport, cross_validate, cross_validate_grid
from .construct.family import corollary_rt, family_rst
from .construct.involution import involution_from, involution_from_unchecked
from .construct.orthogonal import OrthoRecurrence, chebyshev_array, ortho_rs_array
from .core.config import CONFIG
from .core.params import FamilyParams
from .core.series import TruncatedSeries
from .expr.evaluate import evaluate_text
from .group.element import (
    IdentityCheck,
    RiordanElement,
    inverse,
    is_involution,
    is_pseudo_involution,
    product,
)
from .group.matrix import TriangleMatrix, matrix, row_sums

log = logging.getLogger("Riordan.Workbench")

Rational = Union[int, Fraction]


class RiordanWorkbench:
    """
    Evaluate expressions and run constructions at a fixed order.

    Example:
        bench = RiordanWorkbench(order=12)
        pascal = bench.element("1/(1-x)", "x/(1-x)")
        bench.matrix(pascal, rows=5)
        bench.check_pseudo_involution("1/(1-x)", "x/(1-x)")   # holds
    """

    def __init__(self, order: int = CONFIG.DEFAULT_ORDER):
        if order < 1:
            raise ValueError(f"order must be positive, got {order}")
        self.order = order
        log.debug(f"Workbench at order {order}")

    # ═══════════════════════════════════════════════════════════════════
    #                          EXPRESSIONS
    # ═══════════════════════════════════════════════════════════════════

    def series(self, text: str) -> TruncatedSeries:
        return evaluate_text(text, self.order)

    def element(self, g: str, f: str) -> RiordanElement:
        return RiordanElement(self.series(g), self.series(f))

    # ═══════════════════════════════════════════════════════════════════
    #                         GROUP OPERATIONS
    # ═══════════════════════════════════════════════════════════════════

    def product(self, left: RiordanElement, right: RiordanElement) -> RiordanElement:
        return product(left, right)

    def inverse(self, a: RiordanElement) -> RiordanElement:
        return inverse(a)

    def matrix(self, a: RiordanElement, rows: int = CONFIG.DEFAULT_ROWS) -> TriangleMatrix:
        return matrix(a, rows)

    def row_sums(self, a: RiordanElement, rows: int = CONFIG.DEFAULT_ROWS) -> List[Fraction]:
        return row_sums(matrix(a, rows))

    def check_involution(self, g: str, f: str) -> IdentityCheck:
        return is_involution(self.element(g, f))

    def check_pseudo_involution(self, g: str, f: str) -> IdentityCheck:
        return is_pseudo_involution(self.element(g, f))

    # ═══════════════════════════════════════════════════════════════════
    #                          CONSTRUCTIONS
    # ═══════════════════════════════════════════════════════════════════

    def construct(
        self,
        g: str,
        f: str,
        pseudo_g: str = "1",
        pseudo_f: str = "x",
        unchecked: bool = False
    ) -> RiordanElement:
        """I(g, f, P) with P given by expression text."""
        pseudo = self.element(pseudo_g, pseudo_f)
        build = involution_from_unchecked if unchecked else involution_from
        return build(self.series(g), self.series(f), pseudo)

    def family(self, p: FamilyParams) -> RiordanElement:
        return family_rst(p, self.order)

    def corollary(self, r: Rational, t: Rational) -> RiordanElement:
        return corollary_rt(r, t, self.order)

    def chebyshev(
        self, r: Rational, s: Rational, a: Rational, b: Rational
    ) -> Tuple[RiordanElement, OrthoRecurrence]:
        return chebyshev_array(r, s, a, b, self.order)

    def ortho(self, r: Rational, s: Rational) -> Tuple[RiordanElement, OrthoRecurrence]:
        return ortho_rs_array(r, s, self.order)

    # ═══════════════════════════════════════════════════════════════════
    #                            ANALYSIS
    # ═══════════════════════════════════════════════════════════════════

    def jfraction(self, g: str, depth: int = CONFIG.DEFAULT_JFRACTION_DEPTH) -> JFraction:
        return jfraction_expand(self.series(g), depth)

    def bsequence(
        self,
        f: str,
        depth: int = CONFIG.DEFAULT_BSEQ_DEPTH,
        companion: bool = False
    ) -> BSequence:
        """B-sequence of f, or of -f when companion is set."""
        series = self.series(f)
        return b_sequence(-series if companion else series, depth)

    def cross_validate(
        self,
        params: Sequence[FamilyParams],
        workers: Optional[int] = None
    ) -> List[CrossValidationReport]:
        if len(params) == 1:
            return [cross_validate(params[0], self.order)]
        return cross_validate_grid(params, self.order, workers or CONFIG.MAX_WORKERS)