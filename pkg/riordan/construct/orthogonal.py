"""
Riordan Kit - Orthogonal Polynomial Coefficient Arrays
======================================================

Riordan arrays whose row n holds the coefficients of P_n(x), where

    P_n = (x - alpha_n) P_{n-1} - beta_n P_{n-2},  P_0 = 1.

For arrays with f = x / (1 + a x + b x^2) the recurrence is uniform from
n = 3 on; P_1 and the n = 2 step absorb the numerator of g.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from dataclasses import dataclass
from typing import List, Tuple, Union

from ..core.series import TruncatedSeries
from ..group.element import RiordanElement

log = logging.getLogger("Riordan.Construct")

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class OrthoRecurrence:
    """
    Seeds P_0, P_1 (ascending coefficient tuples) and the recurrence
    coefficients for n >= 2: alpha[i], beta[i] apply to P_{i+2}, and the
    last stored value repeats for all larger n.
    """

    p0: Tuple[Fraction, ...]
    p1: Tuple[Fraction, ...]
    alpha: Tuple[Fraction, ...]
    beta: Tuple[Fraction, ...]

    def alpha_at(self, n: int) -> Fraction:
        return self.alpha[min(n - 2, len(self.alpha) - 1)]

    def beta_at(self, n: int) -> Fraction:
        return self.beta[min(n - 2, len(self.beta) - 1)]

    def polynomials(self, count: int) -> List[List[Fraction]]:
        """Coefficient lists of P_0 .. P_{count-1}, lowest degree first."""
        polys: List[List[Fraction]] = [list(self.p0), list(self.p1)][:count]
        for n in range(2, count):
            prev, prev2 = polys[n - 1], polys[n - 2]
            alpha, beta = self.alpha_at(n), self.beta_at(n)
            current = [Fraction(0)] + prev
            for i, c in enumerate(prev):
                current[i] -= alpha * c
            for i, c in enumerate(prev2):
                current[i] -= beta * c
            polys.append(current)
        return polys

    def polynomial(self, n: int) -> List[Fraction]:
        return self.polynomials(n + 1)[n]


def _quadratic(c0: Rational, c1: Rational, c2: Rational, order: int) -> TruncatedSeries:
    return TruncatedSeries.from_coeffs([c0, c1, c2], order)


def chebyshev_array(
    r: Rational,
    s: Rational,
    a: Rational,
    b: Rational,
    order: int
) -> Tuple[RiordanElement, OrthoRecurrence]:
    """
    ((1 - r x - s x^2) / (1 + a x + b x^2), x / (1 + a x + b x^2)), the
    coefficient array of the generalised Chebyshev polynomials with
    P_1 = x - a - r and P_2 = x^2 - (2a + r) x + a^2 + a r - b - s.
    """
    r, s, a, b = (Fraction(v) for v in (r, s, a, b))
    denominator = _quadratic(1, a, b, order)
    element = RiordanElement(
        _quadratic(1, -r, -s, order) / denominator,
        TruncatedSeries.x(order) / denominator,
    )
    recurrence = OrthoRecurrence(
        p0=(Fraction(1),),
        p1=(-a - r, Fraction(1)),
        alpha=(a,),
        beta=(b + s, b),
    )
    return element, recurrence


def ortho_rs_array(r: Rational, s: Rational, order: int) -> Tuple[RiordanElement, OrthoRecurrence]:
    """
    ((1 + (r - s) x) / (1 + (r + s) x), x / ((1 + r x)(1 + (r + s) x))).

    P_1 = x - 2s and P_n = (x - (2r + s)) P_{n-1} - r(r + s) P_{n-2} for
    n >= 3; the n = 2 step uses beta_2 = 2rs, so the uniform form holds
    from n = 2 only when r(r - s) = 0.
    """
    r, s = Fraction(r), Fraction(s)
    x = TruncatedSeries.x(order)
    rs_factor = _quadratic(1, r + s, 0, order)
    element = RiordanElement(
        _quadratic(1, r - s, 0, order) / rs_factor,
        x / (_quadratic(1, r, 0, order) * rs_factor),
    )
    recurrence = OrthoRecurrence(
        p0=(Fraction(1),),
        p1=(-2 * s, Fraction(1)),
        alpha=(2 * r + s,),
        beta=(2 * r * s, r * (r + s)),
    )
    log.debug(f"Orthogonal (r, s) = ({r}, {s}) array at order {order}")
    return element, recurrence
