"""Riordan Kit Construct - Involutions, orthogonal arrays and the (r, s, t) family"""

from ..core.params import FamilyParams
from .involution import (
    involution_from,
    involution_from_unchecked,
    defining_identities,
    conjugate
)
from .orthogonal import OrthoRecurrence, chebyshev_array, ortho_rs_array
from .family import (
    family_rst,
    family_rst_via_construction,
    tilde_closed_forms,
    corollary_rt,
    catalan_variant,
    closed_form_catalan_variant,
    closed_form_catalan,
    closed_form_motzkin,
    closed_form_r1_t2
)
from .crossval import (
    RouteResult,
    RouteComparison,
    CrossValidationReport,
    cross_validate,
    cross_validate_grid
)

__all__ = [
    "FamilyParams",
    "involution_from",
    "involution_from_unchecked",
    "defining_identities",
    "conjugate",
    "OrthoRecurrence",
    "chebyshev_array",
    "ortho_rs_array",
    "family_rst",
    "family_rst_via_construction",
    "tilde_closed_forms",
    "corollary_rt",
    "catalan_variant",
    "closed_form_catalan_variant",
    "closed_form_catalan",
    "closed_form_motzkin",
    "closed_form_r1_t2",
    "RouteResult",
    "RouteComparison",
    "CrossValidationReport",
    "cross_validate",
    "cross_validate_grid"
]
