"""
Riordan Kit - Route Cross-Validation
====================================

Evaluates the (r, s, t) involution along four independent routes and
compares every pair coefficient by coefficient:
- product: the closed product of the two Riordan factors
- construction: I(g, f, (1, x))
- closed-form: the radical closed forms
- jfraction: the predicted continued fractions for g and the row sums

Mismatches are report content. A route that cannot be evaluated at the
given parameters is listed as unavailable with the reason.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..analysis.jfraction import jfraction_eval, predicted_jfractions, row_sums_series
from ..core.config import CONFIG, Route
from ..core.errors import RiordanError
from ..core.params import FamilyParams
from ..core.series import TruncatedSeries, first_difference
from ..group.element import RiordanElement
from .family import family_rst, family_rst_via_construction, tilde_closed_forms

log = logging.getLogger("Riordan.Construct")

COMPONENTS = ("g", "f", "row-sums")


@dataclass(frozen=True)
class RouteResult:
    """Series produced by one route; f is None when the route has no f."""
    route: Route
    g: TruncatedSeries
    f: Optional[TruncatedSeries]
    row_sums: TruncatedSeries

    def component(self, name: str) -> Optional[TruncatedSeries]:
        return {"g": self.g, "f": self.f, "row-sums": self.row_sums}[name]


@dataclass(frozen=True)
class RouteComparison:
    left: Route
    right: Route
    component: str
    first_mismatch: Optional[int] = None
    left_value: Optional[Fraction] = None
    right_value: Optional[Fraction] = None

    @property
    def match(self) -> bool:
        return self.first_mismatch is None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "left": self.left.key,
            "right": self.right.key,
            "component": self.component,
            "match": self.match,
            "first_mismatch": self.first_mismatch,
            "left_value": None if self.left_value is None else str(self.left_value),
            "right_value": None if self.right_value is None else str(self.right_value),
        }


@dataclass(frozen=True)
class CrossValidationReport:
    params: FamilyParams
    order: int
    comparisons: Tuple[RouteComparison, ...]
    unavailable: Dict[str, str] = field(default_factory=dict)

    def between(self, a: Route, b: Route) -> List[RouteComparison]:
        return [c for c in self.comparisons if {c.left, c.right} == {a, b}]

    def agree(self, a: Route, b: Route) -> bool:
        """True when both routes were evaluated and every shared component matches."""
        shared = self.between(a, b)
        return bool(shared) and all(c.match for c in shared)

    def comparison(self, a: Route, b: Route, component: str) -> Optional[RouteComparison]:
        for c in self.between(a, b):
            if c.component == component:
                return c
        return None

    @property
    def mismatches(self) -> List[RouteComparison]:
        return [c for c in self.comparisons if not c.match]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "params": self.params.to_dict(),
            "order": self.order,
            "comparisons": [c.to_dict() for c in self.comparisons],
            "unavailable": dict(self.unavailable),
        }


# ═══════════════════════════════════════════════════════════════════
#                              ROUTES
# ═══════════════════════════════════════════════════════════════════

def _from_element(route: Route, element: RiordanElement) -> RouteResult:
    return RouteResult(route, element.g, element.f, row_sums_series(element))


def _closed_form_route(p: FamilyParams, order: int) -> RouteResult:
    g, f = tilde_closed_forms(p, order)
    return RouteResult(Route.CLOSED_FORM, g, f, g / (1 - f))


def _jfraction_route(p: FamilyParams, order: int) -> RouteResult:
    # d levels are exact through x^(2d - 1)
    first, second = predicted_jfractions(p, order // 2 + 1)
    return RouteResult(Route.JFRACTION, jfraction_eval(first, order), None, jfraction_eval(second, order))


def _compare(a: RouteResult, b: RouteResult, component: str) -> Optional[RouteComparison]:
    left, right = a.component(component), b.component(component)
    if left is None or right is None:
        return None
    index = first_difference(left, right)
    if index is None:
        return RouteComparison(a.route, b.route, component)
    return RouteComparison(a.route, b.route, component, index, left[index], right[index])


def cross_validate(p: FamilyParams, order: int = CONFIG.DEFAULT_ORDER) -> CrossValidationReport:
    builders = (
        (Route.PRODUCT, lambda: _from_element(Route.PRODUCT, family_rst(p, order))),
        (Route.CONSTRUCTION, lambda: _from_element(Route.CONSTRUCTION, family_rst_via_construction(p, order))),
        (Route.CLOSED_FORM, lambda: _closed_form_route(p, order)),
        (Route.JFRACTION, lambda: _jfraction_route(p, order)),
    )
    results: List[RouteResult] = []
    unavailable: Dict[str, str] = {}
    for route, build in builders:
        try:
            results.append(build())
        except RiordanError as e:
            log.info(f"Route {route.key} unavailable at {p}: {e}")
            unavailable[route.key] = str(e)

    comparisons: List[RouteComparison] = []
    for a, b in combinations(results, 2):
        for component in COMPONENTS:
            comparison = _compare(a, b, component)
            if comparison is None:
                continue
            if not comparison.match:
                log.warning(
                    f"{a.route.key} vs {b.route.key} at {p}: {component} differs at "
                    f"x^{comparison.first_mismatch} ({comparison.left_value} vs {comparison.right_value})"
                )
            comparisons.append(comparison)
    return CrossValidationReport(p, order, tuple(comparisons), unavailable)


def cross_validate_grid(
    params: Sequence[FamilyParams],
    order: int = CONFIG.DEFAULT_ORDER,
    workers: int = CONFIG.MAX_WORKERS
) -> List[CrossValidationReport]:
    """Evaluate grid points in a thread pool; reports keep the input order."""
    if not params:
        return []
    with ThreadPoolExecutor(max_workers=max(1, min(workers, len(params)))) as executor:
        reports = list(executor.map(lambda p: cross_validate(p, order), params))
    log.info(f"Cross-validated {len(reports)} parameter points at order {order}")
    return reports
