"""
Shared pytest fixtures: seeded random series and elements, golden matrices.
"""

from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path
from typing import Callable, List

import pytest

from riordan.analysis.export import load_matrix_json
from riordan.core.series import TruncatedSeries
from riordan.group.element import RiordanElement
from riordan.group.matrix import TriangleMatrix
from riordan.workbench import RiordanWorkbench

FIXTURES = Path(__file__).parent / "tests" / "fixtures"

SMALL = [Fraction(v) for v in (-2, -1, 1, 2, 3)] + [Fraction(-1, 2), Fraction(1, 2), Fraction(3, 2)]
UNITS = [Fraction(v) for v in (1, 2, -1, 3)] + [Fraction(1, 2), Fraction(-3, 2)]


def _sparse(rng: random.Random, count: int, density: float = 0.6) -> List[Fraction]:
    return [rng.choice(SMALL) if rng.random() < density else Fraction(0) for _ in range(count)]


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


@pytest.fixture
def make_series(rng: random.Random) -> Callable[..., TruncatedSeries]:
    """
    Random sparse polynomial series with small integer / half-integer
    coefficients. `constant` fixes c0; `valuation` zeroes the low terms.
    """

    def build(order: int, degree: int = 6, constant=None, valuation: int = 0) -> TruncatedSeries:
        coeffs = _sparse(rng, degree + 1)
        for i in range(min(valuation, len(coeffs))):
            coeffs[i] = Fraction(0)
        if constant is not None:
            coeffs[0] = Fraction(constant)
        elif valuation == 0 and coeffs[0] == 0:
            coeffs[0] = rng.choice(UNITS)
        return TruncatedSeries.from_coeffs(coeffs, order)

    return build


@pytest.fixture
def make_element(rng: random.Random, make_series) -> Callable[..., RiordanElement]:
    """Random Riordan element: g(0) a nonzero rational, f = f1 x + sparse terms."""

    def build(order: int, degree: int = 4, unit_g: bool = False) -> RiordanElement:
        g = make_series(order, degree, constant=1 if unit_g else rng.choice(UNITS))
        f_coeffs = [Fraction(0), rng.choice(UNITS)] + _sparse(rng, degree - 1, 0.5)
        return RiordanElement(g, TruncatedSeries.from_coeffs(f_coeffs, order))

    return build


@pytest.fixture
def golden() -> Callable[[str], TriangleMatrix]:
    def load(name: str) -> TriangleMatrix:
        return load_matrix_json(FIXTURES / f"{name}.json")

    return load


@pytest.fixture
def bench() -> RiordanWorkbench:
    return RiordanWorkbench(order=24)
