"""Riordan Kit Group - Riordan group elements and their matrices"""

from .element import (
    RiordanElement,
    IdentityCheck,
    identity,
    reflection,
    product,
    inverse,
    power,
    negate_f,
    substitute_negative,
    factor,
    bin_element,
    is_identity,
    is_involution,
    is_pseudo_involution
)
from .matrix import TriangleMatrix, matrix, row_sums

__all__ = [
    "RiordanElement",
    "IdentityCheck",
    "identity",
    "reflection",
    "product",
    "inverse",
    "power",
    "negate_f",
    "substitute_negative",
    "factor",
    "bin_element",
    "is_identity",
    "is_involution",
    "is_pseudo_involution",
    "TriangleMatrix",
    "matrix",
    "row_sums"
]
