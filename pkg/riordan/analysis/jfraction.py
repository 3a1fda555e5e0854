"""
Riordan Kit - Jacobi Continued Fractions
========================================

    g = 1 / (1 - a0 x - b1 x^2 / (1 - a1 x - b2 x^2 / (1 - ...)))

- jfraction_expand peels one level at a time from a series with g(0) = 1
- jfraction_eval evaluates a finite fraction bottom-up
- predicted_jfractions gives the two fractions attached to the (r, s, t)
  family: one for g and one for the row sums

A fraction with d alphas and d - 1 betas determines the series exactly
through the coefficient of x^(2d - 1). A zero beta ends the fraction: it is
terminated, and exact at every order, only when nothing is left over;
otherwise the fraction records the cutoff index it is exact through.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..core.config import CONFIG
from ..core.errors import NonUnitConstant
from ..core.params import FamilyParams
from ..core.series import TruncatedSeries, div_x_power
from ..group.element import RiordanElement

log = logging.getLogger("Riordan.Analysis")


@dataclass(frozen=True)
class JFraction:
    """alphas = (a0, a1, ...), betas = (b1, b2, ...)."""

    alphas: Tuple[Fraction, ...]
    betas: Tuple[Fraction, ...] = field(default_factory=tuple)
    terminated: bool = False
    cutoff: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(Fraction(a) for a in self.alphas))
        object.__setattr__(self, "betas", tuple(Fraction(b) for b in self.betas))
        if len(self.betas) >= max(len(self.alphas), 1):
            raise ValueError(
                f"{len(self.betas)} betas need at least {len(self.betas) + 1} alphas"
            )

    @property
    def depth(self) -> int:
        return len(self.alphas)

    @property
    def exact_order(self) -> Optional[int]:
        """Highest coefficient index reproduced exactly, None if every index is."""
        if self.terminated:
            return None
        if self.cutoff is not None:
            return self.cutoff
        return 2 * self.depth - 1

    def agrees_with(self, other: JFraction, depth: Optional[int] = None) -> bool:
        """Compare the first `depth` levels (default: the shorter fraction)."""
        n = min(self.depth, other.depth) if depth is None else depth
        if n > self.depth or n > other.depth:
            return False
        return self.alphas[:n] == other.alphas[:n] and self.betas[: n - 1] == other.betas[: n - 1]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "alphas": [str(a) for a in self.alphas],
            "betas": [str(b) for b in self.betas],
            "terminated": self.terminated,
            "exact_order": self.exact_order,
        }

    @classmethod
    def from_levels(cls, alphas: Sequence, betas: Sequence) -> JFraction:
        """Cut the fraction at the first zero beta."""
        alphas = [Fraction(a) for a in alphas]
        betas = [Fraction(b) for b in betas]
        for i, b in enumerate(betas):
            if b == 0:
                return cls(tuple(alphas[: i + 1]), tuple(betas[:i]), True)
        return cls(tuple(alphas), tuple(betas), False)


# ═══════════════════════════════════════════════════════════════════
#                      EXPANSION & EVALUATION
# ═══════════════════════════════════════════════════════════════════

def jfraction_expand(g: TruncatedSeries, depth: int) -> JFraction:
    """
    Peel up to `depth` levels off g.

    With h = 1 - 1/g_k: a_k = [x]h, b_(k+1) = [x^2]h and
    g_(k+1) = (h - a_k x) / (b_(k+1) x^2). Each level costs two orders of
    precision; expansion stops early when precision runs out.

    Raises:
        NonUnitConstant: g(0) != 1
    """
    if depth < 1:
        raise ValueError(f"depth must be positive, got {depth}")
    if g[0] != 1:
        raise NonUnitConstant(g[0])

    alphas: List[Fraction] = []
    betas: List[Fraction] = []
    current = g
    for k in range(depth):
        if current.order < 1:
            log.debug(f"Precision exhausted after {k} levels")
            break
        h = 1 - 1 / current
        alpha = h[1]
        alphas.append(alpha)
        if k == depth - 1 or h.order < 3:
            break
        beta = h[2]
        remainder = h - TruncatedSeries.from_coeffs([0, alpha], h.order)
        if beta == 0:
            if remainder.is_zero():
                log.debug(f"Terminated at level {k}: beta_{k + 1} = 0")
                return JFraction(tuple(alphas), tuple(betas), True)
            # the leftover x^v term of g_k first shows in g at x^(v + 2k)
            cutoff = remainder.valuation + 2 * k - 1
            log.warning(
                f"Expansion ends at level {k} with a nonzero remainder "
                f"(valuation {remainder.valuation}); exact through x^{cutoff} only"
            )
            return JFraction(tuple(alphas), tuple(betas), False, cutoff)
        betas.append(beta)
        current = div_x_power(remainder, 2) / beta

    log.debug(f"Expanded {len(alphas)} levels from order {g.order}")
    return JFraction(tuple(alphas), tuple(betas), False)


def jfraction_eval(jf: JFraction, order: int) -> TruncatedSeries:
    """Bottom-up evaluation of the finite fraction to the given order."""
    if not jf.alphas:
        return TruncatedSeries.one(order)
    x = TruncatedSeries.x(order)
    x_squared = x * x
    value: Optional[TruncatedSeries] = None
    for k in range(jf.depth - 1, -1, -1):
        denominator = 1 - x * jf.alphas[k]
        if value is not None:
            denominator = denominator - x_squared * value * jf.betas[k]
        value = 1 / denominator
    return value


# ═══════════════════════════════════════════════════════════════════
#                      FAMILY PREDICTIONS
# ═══════════════════════════════════════════════════════════════════

def predicted_jfractions(
    p: FamilyParams,
    depth: int = CONFIG.DEFAULT_JFRACTION_DEPTH
) -> Tuple[JFraction, JFraction]:
    """
    Fractions predicted for the family member at p:
    - g: a0 = 2r, b1 = 2rt
    - row sums: a0 = 2r - 1, b1 = 2t(r - 1)
    both with tail a_k = r + 2t (k >= 1), b_k = s + t(r + t) (k >= 2).
    """
    if depth < 1:
        raise ValueError(f"depth must be positive, got {depth}")
    tail_alphas = [p.d1] * (depth - 1)
    tail_betas = [p.tail_beta] * max(depth - 2, 0)

    def build(alpha0: Fraction, beta1: Fraction) -> JFraction:
        betas = ([beta1] + tail_betas) if depth > 1 else []
        return JFraction.from_levels([alpha0] + tail_alphas, betas)

    first = build(2 * p.r, 2 * p.r * p.t)
    second = build(2 * p.r - 1, 2 * p.t * (p.r - 1))
    return first, second


def row_sums_series(element: RiordanElement) -> TruncatedSeries:
    """g / (1 - f), the generating function of the row sums."""
    return element.g / (1 - element.f)
