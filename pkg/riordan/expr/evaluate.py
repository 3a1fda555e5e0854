"""
Riordan Kit - Expression Evaluation
===================================

Expands an ExprAst into a TruncatedSeries. The builtins c, M and S are
expanded from their radical closed forms, one or two orders deeper so that
the division by x or x^2 lands exactly on the requested order.
"""

from __future__ import annotations

import logging
from functools import lru_cache

from ..core.config import Builtin
from ..core.errors import CompositionNonComposable
from ..core.series import (
    TruncatedSeries,
    compose,
    div_x_power,
    power,
    sqrt,
)
from .parser import ExprAst, NodeKind, parse

log = logging.getLogger("Riordan.Expr")


def _radical_quotient(order: int, linear: int, radicand, shift: int) -> TruncatedSeries:
    # (1 - linear*x - sqrt(radicand)) / (2 x^shift), expanded to `order`
    working = order + shift
    root = sqrt(TruncatedSeries.from_coeffs(radicand, working))
    numerator = TruncatedSeries.from_coeffs([1, -linear], working) - root
    return div_x_power(numerator, shift) / 2


@lru_cache(maxsize=64)
def builtin_series(builtin: Builtin, order: int) -> TruncatedSeries:
    """Series of c(x), M(x) or S(x) to the given order."""
    if builtin is Builtin.CATALAN:
        return _radical_quotient(order, 0, [1, -4], 1)
    if builtin is Builtin.MOTZKIN:
        return _radical_quotient(order, 1, [1, -2, -3], 2)
    return _radical_quotient(order, 1, [1, -6, 1], 1)


def evaluate(ast: ExprAst, order: int) -> TruncatedSeries:
    """
    Expand an expression to the requested order.

    Division by a series with zero constant term cancels the common power
    of x, so the result order can be smaller than requested.
    """
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    kind = ast.kind
    if kind is NodeKind.LITERAL:
        return TruncatedSeries.constant(ast.value, order)
    if kind is NodeKind.VARIABLE:
        return TruncatedSeries.x(order)
    if kind is NodeKind.NEG:
        return -evaluate(ast.children[0], order)
    if kind is NodeKind.SQRT:
        return sqrt(evaluate(ast.children[0], order))
    if kind is NodeKind.POW:
        return power(evaluate(ast.children[0], order), ast.exponent)
    if kind is NodeKind.CALL:
        argument = evaluate(ast.children[0], order)
        if argument[0] != 0:
            raise CompositionNonComposable(argument[0])
        return compose(builtin_series(Builtin.from_symbol(ast.name), argument.order), argument)

    left = evaluate(ast.children[0], order)
    right = evaluate(ast.children[1], order)
    if kind is NodeKind.ADD:
        return left + right
    if kind is NodeKind.SUB:
        return left - right
    if kind is NodeKind.MUL:
        return left * right
    return left / right


def evaluate_text(text: str, order: int) -> TruncatedSeries:
    """Parse and expand in one step."""
    series = evaluate(parse(text), order)
    log.debug(f"Expanded {text!r} to order {series.order}")
    return series
