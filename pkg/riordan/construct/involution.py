"""
Riordan Kit - Involutions from Pseudo-Involutions
=================================================

For any element (g, f) and any pseudo-involution P,

    I(g, f, P) = (g, f)^-1 * P * (g(-x), f(-x))

is an involution: (g(-x), f(-x)) = (1, -x) * (g, f), so I is the
conjugate of the involution P * (1, -x) by (g, f).
"""

from __future__ import annotations

import logging
from typing import Tuple

from ..core.errors import NotPseudoInvolution
from ..core.series import TruncatedSeries
from ..group.element import (
    IdentityCheck,
    RiordanElement,
    inverse,
    is_pseudo_involution,
    product,
    substitute_negative,
)

log = logging.getLogger("Riordan.Construct")


def involution_from_unchecked(
    g: TruncatedSeries,
    f: TruncatedSeries,
    pseudo: RiordanElement
) -> RiordanElement:
    """The triple product without verifying that P is a pseudo-involution."""
    base = RiordanElement(g, f)
    return product(product(inverse(base), pseudo), substitute_negative(base))


def involution_from(
    g: TruncatedSeries,
    f: TruncatedSeries,
    pseudo: RiordanElement
) -> RiordanElement:
    """
    I(g, f, P).

    Raises:
        NotInRiordanGroup: (g, f) is not a group element
        NotPseudoInvolution: P fails the pseudo-involution check
    """
    check = is_pseudo_involution(pseudo)
    if not check:
        raise NotPseudoInvolution(check.failing_order, check.component)
    result = involution_from_unchecked(g, f, pseudo)
    log.info(f"Built involution I(g, f, P) at order {result.order}")
    return result


def defining_identities(
    base: RiordanElement,
    pseudo: RiordanElement,
    involution: RiordanElement
) -> Tuple[IdentityCheck, IdentityCheck]:
    """
    Check (g, f) * I = P * (g(-x), f(-x)) and
    P * (g(-x), f(-x)) * I = (g, f).
    """
    reflected = product(pseudo, substitute_negative(base))
    left = product(base, involution)
    first = _pair_check(left, reflected)
    second = _pair_check(product(reflected, involution), base)
    return first, second


def _pair_check(actual: RiordanElement, expected: RiordanElement) -> IdentityCheck:
    g_check = IdentityCheck.compare("g", actual.g, expected.g)
    if not g_check:
        return g_check
    return IdentityCheck.compare("f", actual.f, expected.f)


def conjugate(element: RiordanElement, by: RiordanElement) -> RiordanElement:
    """by^-1 * element * by."""
    return product(product(inverse(by), element), by)

