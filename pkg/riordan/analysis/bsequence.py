"""
Riordan Kit - B-Sequences
=========================

The B-sequence (b0, b1, ...) of a pseudo-involution's f = x + ... solves

    f = x + x f B(x f),   B(w) = sum b_k w^k.

The multiplier of b_k is x f (x f)^k, which starts at x^(2k+2) with
coefficient 1, so each b_k is read off the residual in turn.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

from ..core.config import CONFIG
from ..core.errors import BadNormalization
from ..core.series import TruncatedSeries, shift

log = logging.getLogger("Riordan.Analysis")


@dataclass(frozen=True)
class BSequence:
    terms: Tuple[Fraction, ...]
    residual_ok: bool

    def to_dict(self) -> Dict[str, Any]:
        return {"terms": [str(b) for b in self.terms], "residual_ok": self.residual_ok}


def b_sequence(f: TruncatedSeries, depth: int = CONFIG.DEFAULT_BSEQ_DEPTH) -> BSequence:
    """
    Extract b0 .. b_(depth-1), fewer when the order cannot determine them.

    residual_ok records whether the functional equation holds at every
    coefficient the extracted terms determine.

    Raises:
        BadNormalization: f(0) != 0 or f'(0) != 1
    """
    if f.order < 1 or f[0] != 0 or f[1] != 1:
        linear = f[1] if f.order >= 1 else None
        raise BadNormalization(f[0], linear)

    order = f.order
    w = shift(f, 1)
    residual = f - TruncatedSeries.x(order)
    multiplier = w
    terms: List[Fraction] = []
    for k in range(depth):
        index = 2 * k + 2
        if index > order:
            log.debug(f"Order {order} determines only {k} B-sequence terms")
            break
        b = residual[index]
        terms.append(b)
        if b:
            residual = residual - multiplier * b
        multiplier = multiplier * w

    checked = min(order, 2 * len(terms) + 1)
    residual_ok = all(residual[i] == 0 for i in range(checked + 1))
    if not residual_ok:
        log.warning(f"B-sequence residual is nonzero below x^{checked + 1}")
    return BSequence(tuple(terms), residual_ok)
