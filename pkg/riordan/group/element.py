"""
Riordan Kit - Riordan Group Elements
====================================

Abstract elements (g, f) of the Riordan group with
- g(0) != 0 (invertible series) and f(0) = 0, f'(0) != 0 (composable)
- product (g, f) * (u, v) = (g * u(f), v(f))
- inverse (1 / g(fbar), fbar)
- involution and pseudo-involution predicates with diagnostics
- the one-parameter Bin subgroup (1/(1 - a x), x/(1 - a x))

Predicates are decided to the working truncation order only.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple, Union

from ..core.errors import NotInRiordanGroup
from ..core.series import (
    TruncatedSeries,
    comp_inverse,
    compose,
    first_difference,
    subst_neg,
    truncate,
)

log = logging.getLogger("Riordan.Group")


@dataclass(frozen=True)
class IdentityCheck:
    """
    Outcome of comparing two series to working order.

    failing_order is the smallest k for which the identity fails modulo
    x^k (one past the first differing coefficient index); component names
    the part of the pair that failed ("g" or "f").
    """

    holds: bool
    failing_order: Optional[int] = None
    component: Optional[str] = None
    expected: Optional[Fraction] = None
    actual: Optional[Fraction] = None

    def __bool__(self) -> bool:
        return self.holds

    @property
    def coefficient_index(self) -> Optional[int]:
        return None if self.failing_order is None else self.failing_order - 1

    @classmethod
    def passed(cls) -> IdentityCheck:
        return cls(True)

    @classmethod
    def compare(cls, component: str, actual: TruncatedSeries, expected: TruncatedSeries) -> IdentityCheck:
        index = first_difference(actual, expected)
        if index is None:
            return cls.passed()
        return cls(False, index + 1, component, expected[index], actual[index])

    def to_dict(self) -> Dict[str, Any]:
        return {
            "holds": self.holds,
            "failing_order": self.failing_order,
            "component": self.component,
            "expected": None if self.expected is None else str(self.expected),
            "actual": None if self.actual is None else str(self.actual),
        }


@dataclass(frozen=True)
class RiordanElement:
    """
    Pair (g, f) sharing one truncation order.

    Construction truncates both series to the smaller order and checks the
    group invariants.
    """

    g: TruncatedSeries
    f: TruncatedSeries

    def __post_init__(self):
        order = min(self.g.order, self.f.order)
        if order < 1:
            raise NotInRiordanGroup("a Riordan element needs truncation order >= 1")
        object.__setattr__(self, "g", truncate(self.g, order))
        object.__setattr__(self, "f", truncate(self.f, order))
        if self.g[0] == 0:
            raise NotInRiordanGroup("g(0) must be nonzero")
        if self.f[0] != 0:
            raise NotInRiordanGroup(f"f(0) must be zero, found {self.f[0]}")
        if self.f[1] == 0:
            raise NotInRiordanGroup("f'(0) must be nonzero")

    @property
    def order(self) -> int:
        return self.g.order

    def __mul__(self, other: RiordanElement) -> RiordanElement:
        if not isinstance(other, RiordanElement):
            return NotImplemented
        return product(self, other)

    def __pow__(self, exponent: int) -> RiordanElement:
        return power(self, exponent)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RiordanElement):
            return NotImplemented
        return self.g == other.g and self.f == other.f

    __hash__ = None

    def inverse(self) -> RiordanElement:
        return inverse(self)

    def negate_f(self) -> RiordanElement:
        return negate_f(self)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "order": self.order,
            "g": [str(c) for c in self.g],
            "f": [str(c) for c in self.f],
        }

    def __repr__(self) -> str:
        return f"RiordanElement(g={self.g!r}, f={self.f!r})"


# ═══════════════════════════════════════════════════════════════════
#                          GROUP STRUCTURE
# ═══════════════════════════════════════════════════════════════════

def identity(order: int) -> RiordanElement:
    return RiordanElement(TruncatedSeries.one(order), TruncatedSeries.x(order))


def reflection(order: int) -> RiordanElement:
    """(1, -x)."""
    return RiordanElement(TruncatedSeries.one(order), -TruncatedSeries.x(order))


def product(a: RiordanElement, b: RiordanElement) -> RiordanElement:
    """(a.g * b.g(a.f), b.f(a.f))."""
    return RiordanElement(a.g * compose(b.g, a.f), compose(b.f, a.f))


def inverse(a: RiordanElement) -> RiordanElement:
    """(1 / g(fbar), fbar) with fbar the compositional inverse of f."""
    fbar = comp_inverse(a.f)
    return RiordanElement(1 / compose(a.g, fbar), fbar)


def power(a: RiordanElement, exponent: int) -> RiordanElement:
    if exponent < 0:
        return power(inverse(a), -exponent)
    result = identity(a.order)
    base = a
    while exponent:
        if exponent & 1:
            result = product(result, base)
        exponent >>= 1
        if exponent:
            base = product(base, base)
    return result


def negate_f(a: RiordanElement) -> RiordanElement:
    """a * (1, -x) = (g, -f)."""
    return RiordanElement(a.g, -a.f)


def substitute_negative(a: RiordanElement) -> RiordanElement:
    """(g(-x), f(-x)), which equals (1, -x) * a."""
    return RiordanElement(subst_neg(a.g), subst_neg(a.f))


def factor(a: RiordanElement) -> Tuple[RiordanElement, RiordanElement]:
    """Split a into (g, x) * (1, f)."""
    order = a.order
    return (
        RiordanElement(a.g, TruncatedSeries.x(order)),
        RiordanElement(TruncatedSeries.one(order), a.f),
    )


def bin_element(alpha: Union[int, Fraction], order: int) -> RiordanElement:
    """(1/(1 - alpha x), x/(1 - alpha x)); alpha = 1 gives Pascal's triangle."""
    alpha = Fraction(alpha)
    geometric = TruncatedSeries.from_coeffs([alpha ** n for n in range(order + 1)], order)
    return RiordanElement(geometric, TruncatedSeries.x(order) * geometric)


# ═══════════════════════════════════════════════════════════════════
#                            PREDICATES
# ═══════════════════════════════════════════════════════════════════

def is_identity(a: RiordanElement) -> IdentityCheck:
    order = a.order
    g_check = IdentityCheck.compare("g", a.g, TruncatedSeries.one(order))
    f_check = IdentityCheck.compare("f", a.f, TruncatedSeries.x(order))
    failures = [c for c in (g_check, f_check) if not c]
    if not failures:
        return IdentityCheck.passed()
    return min(failures, key=lambda c: c.failing_order)


def is_involution(a: RiordanElement) -> IdentityCheck:
    """g * g(f) = 1 and f(f) = x to working order."""
    check = is_identity(product(a, a))
    if not check:
        log.debug(f"Not an involution: {check.component} fails modulo x^{check.failing_order}")
    return check


def is_pseudo_involution(a: RiordanElement) -> IdentityCheck:
    """(g, -f) is an involution."""
    return is_involution(negate_f(a))
