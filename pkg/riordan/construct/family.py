"""
Riordan Kit - The (r, s, t) Involution Family
=============================================

Three evaluations of one involution family, with

    D(x) = 1 + (r + 2t) x + (rt + s + t^2) x^2
    N(x) = 1 - (r - 2t) x - (rt - s - t^2) x^2

- family_rst: (N/D, x/D)^-1 * (1, -x(1 + 2tx)/N)
- family_rst_via_construction: I(g, f, (1, x)) for
  g = 1/(1 + rx + sx^2), f = x(1 - tx)/(1 + rx + sx^2)
- tilde_closed_forms: the radical closed forms, expanded as written

plus the s = 0 member (corollary_rt) and named closed forms of several members.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Tuple, Union

from ..core.config import Builtin
from ..core.errors import Degenerate
from ..core.params import FamilyParams
from ..core.series import TruncatedSeries, compose, sqrt
from ..expr.evaluate import builtin_series
from ..group.element import RiordanElement, identity, inverse, product
from .involution import involution_from

log = logging.getLogger("Riordan.Construct")

Rational = Union[int, Fraction]


def _poly(coeffs, order: int) -> TruncatedSeries:
    return TruncatedSeries.from_coeffs(coeffs, order)


# ═══════════════════════════════════════════════════════════════════
#                        THE THREE ROUTES
# ═══════════════════════════════════════════════════════════════════

def family_rst(p: FamilyParams, order: int) -> RiordanElement:
    """Closed product of the two Riordan factors."""
    x = TruncatedSeries.x(order)
    d = _poly([1, p.d1, p.d2], order)
    n = _poly([1, p.n1, p.n2], order)
    first = RiordanElement(n / d, x / d)
    second = RiordanElement(TruncatedSeries.one(order), -x * _poly([1, 2 * p.t], order) / n)
    result = product(inverse(first), second)
    log.debug(f"family_rst{p} at order {order}")
    return result


def family_rst_via_construction(p: FamilyParams, order: int) -> RiordanElement:
    """I(1/(1 + rx + sx^2), x(1 - tx)/(1 + rx + sx^2), (1, x))."""
    x = TruncatedSeries.x(order)
    denominator = _poly([1, p.r, p.s], order)
    g = 1 / denominator
    f = x * _poly([1, -p.t], order) / denominator
    return involution_from(g, f, identity(order))


def tilde_closed_forms(p: FamilyParams, order: int) -> Tuple[TruncatedSeries, TruncatedSeries]:
    """
    Expand the radical closed forms for g and f.

    Both denominators and the numerator of g share the constant
    s + t(r + t); a zero value raises Degenerate.
    """
    r, s, t = p.r, p.s, p.t
    constant = p.tail_beta
    if constant == 0:
        raise Degenerate(f"s + t(r + t) vanishes at {p}")
    root = sqrt(_poly([1, -2 * (r + 2 * t), r * r - 4 * s], order))

    g_denominator = (
        _poly([s + t * (t + 1), -(r * r * t + 2 * r * s - s + t * t)], order)
        + root * (t * (r - 1))
    )
    g = TruncatedSeries.constant(constant, order) / g_denominator

    f_numerator = root * t + _poly([-t, t * t - s], order)
    f_denominator = _poly([s + t * t, -r * (r * t + 2 * s)], order) + root * (r * t)
    f = f_numerator / f_denominator
    return g, f


# ═══════════════════════════════════════════════════════════════════
#                       SPECIAL CASES
# ═══════════════════════════════════════════════════════════════════

def corollary_rt(r: Rational, t: Rational, order: int) -> RiordanElement:
    """The s = 0 member, written with the factored D and N."""
    r, t = Fraction(r), Fraction(t)
    x = TruncatedSeries.x(order)
    tx = _poly([1, t], order)
    first = RiordanElement(
        _poly([1, t - r], order) / _poly([1, t + r], order),
        x / (tx * _poly([1, t + r], order)),
    )
    second = RiordanElement(
        TruncatedSeries.one(order),
        -x * _poly([1, 2 * t], order) / (tx * _poly([1, t - r], order)),
    )
    return product(inverse(first), second)


def catalan_variant(t: Rational, order: int) -> RiordanElement:
    """family_rst(2t, t^2, t)."""
    t = Fraction(t)
    return family_rst(FamilyParams(2 * t, t * t, t), order)


def closed_form_catalan_variant(t: Rational, order: int) -> RiordanElement:
    """(c(2tx)^2, -x c(2tx)^3)."""
    c = compose(builtin_series(Builtin.CATALAN, order), _poly([0, 2 * Fraction(t)], order))
    return RiordanElement(c * c, -TruncatedSeries.x(order) * c * c * c)


def closed_form_catalan(order: int) -> RiordanElement:
    """((1 + xc)c, -x(1 + xc)c)."""
    c = builtin_series(Builtin.CATALAN, order)
    g = (1 + TruncatedSeries.x(order) * c) * c
    return RiordanElement(g, -TruncatedSeries.x(order) * g)


def closed_form_motzkin(order: int) -> RiordanElement:
    """(c(x^2/(1+x)^4)/(1+x)^2, -x c(x^2/(1+x)^4)/(1+x)^2)."""
    x = TruncatedSeries.x(order)
    one_plus_x = _poly([1, 1], order)
    argument = x * x / one_plus_x ** 4
    g = compose(builtin_series(Builtin.CATALAN, order), argument) / one_plus_x ** 2
    return RiordanElement(g, -x * g)


def closed_form_r1_t2(order: int) -> RiordanElement:
    """
    (3/(2 - x + R), -(1 - 5x + x^2 - (1 - x) R)/(1 + 2x)) with
    R = sqrt(1 - 10x + x^2).
    """
    root = sqrt(_poly([1, -10, 1], order))
    g = 3 / (_poly([2, -1], order) + root)
    f = -(_poly([1, -5, 1], order) - _poly([1, -1], order) * root) / _poly([1, 2], order)
    return RiordanElement(g, f)
