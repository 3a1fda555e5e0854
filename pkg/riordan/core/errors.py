"""
Riordan Kit - Error Hierarchy
=============================

Every library error derives from RiordanError and names the process exit
code the command-line front end reports for it.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .config import ExitCode


class RiordanError(ValueError):
    """Base class for all library errors."""

    exit_code: ExitCode = ExitCode.DOMAIN


# ═══════════════════════════════════════════════════════════════════
#                         SERIES ARITHMETIC
# ═══════════════════════════════════════════════════════════════════

class SeriesError(RiordanError):
    """Raised by truncated power series operations."""


class DivisionByNonUnit(SeriesError):
    def __init__(self, numerator_valuation: int, denominator_valuation: int):
        self.numerator_valuation = numerator_valuation
        self.denominator_valuation = denominator_valuation
        super().__init__(
            f"division by a non-unit: denominator valuation {denominator_valuation} "
            f"exceeds numerator valuation {numerator_valuation}"
        )


class CompositionNonComposable(SeriesError):
    def __init__(self, constant_term):
        self.constant_term = constant_term
        super().__init__(
            f"inner series must have zero constant term, found {constant_term}"
        )


class NotInvertible(SeriesError):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"series has no compositional inverse: {reason}")


class NoRationalSqrt(SeriesError):
    def __init__(self, leading_term, valuation: int = 0):
        self.leading_term = leading_term
        self.valuation = valuation
        if valuation % 2:
            reason = f"leading term {leading_term}*x^{valuation} has odd valuation"
        else:
            reason = f"leading coefficient {leading_term} is not the square of a nonzero rational"
        super().__init__(f"no rational square root: {reason}")


class NonzeroLowOrder(SeriesError):
    def __init__(self, index: int, value):
        self.index = index
        self.value = value
        super().__init__(f"coefficient of x^{index} is {value}, expected 0")


class OrderTooSmall(SeriesError):
    def __init__(self, required: int, available: int):
        self.required = required
        self.available = available
        super().__init__(
            f"truncation order {available} is too small, need at least {required}"
        )


# ═══════════════════════════════════════════════════════════════════
#                        GROUP & CONSTRUCTIONS
# ═══════════════════════════════════════════════════════════════════

class NotInRiordanGroup(RiordanError):
    """The pair (g, f) violates g(0) != 0, f(0) = 0 or f'(0) != 0."""


class NotPseudoInvolution(RiordanError):
    def __init__(self, failing_order: Optional[int], component: Optional[str]):
        self.failing_order = failing_order
        self.component = component
        super().__init__(
            f"P is not a pseudo-involution: {component} identity fails "
            f"modulo x^{failing_order}"
        )


class Degenerate(RiordanError):
    """A closed form has a vanishing constant in a numerator or denominator."""


class NonUnitConstant(RiordanError):
    def __init__(self, constant_term):
        self.constant_term = constant_term
        super().__init__(f"series must start with 1, found constant term {constant_term}")


class BadNormalization(RiordanError):
    def __init__(self, constant_term, linear_term):
        self.constant_term = constant_term
        self.linear_term = linear_term
        super().__init__(
            f"B-sequence needs f = x + ..., found f(0) = {constant_term}, "
            f"f'(0) = {linear_term}"
        )


# ═══════════════════════════════════════════════════════════════════
#                           FRONT END
# ═══════════════════════════════════════════════════════════════════

class ParseError(RiordanError):
    """Expression text does not match the grammar."""

    exit_code = ExitCode.USAGE

    def __init__(self, position: int, expected: Sequence[str], found: str):
        self.position = position
        self.expected = tuple(expected)
        self.found = found
        super().__init__(
            f"parse error at position {position}: expected "
            f"{' or '.join(self.expected)}, found {found}"
        )


class CheckFailed(RiordanError):
    """A requested predicate check evaluated to false."""

    exit_code = ExitCode.CHECK_FAILED
