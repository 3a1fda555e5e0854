"""
Truncated power series: ring operations, division, composition, inversion
and square roots over exact rationals.
"""

from fractions import Fraction

import pytest

from riordan.core.errors import (
    CompositionNonComposable,
    DivisionByNonUnit,
    NoRationalSqrt,
    NonzeroLowOrder,
    NotInvertible,
    OrderTooSmall,
)
from riordan.core.series import (
    TruncatedSeries,
    comp_inverse,
    compose,
    derivative,
    div,
    div_x_power,
    first_difference,
    shift,
    sqrt,
    subst_neg,
    truncate,
    valuation,
)

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]


def series(*values, order=None):
    return TruncatedSeries.from_coeffs(values, len(values) - 1 if order is None else order)


def test_from_coeffs_pads_and_truncates():
    assert list(series(1, 2, order=4)) == [1, 2, 0, 0, 0]
    assert list(series(1, 2, 3, 4, order=1)) == [1, 2]
    assert all(isinstance(c, Fraction) for c in series(1, 2))


def test_binary_operations_truncate_to_smaller_order():
    a = series(1, 1, 1, 1, 1)
    b = series(1, -1, order=2)
    assert (a + b).order == 2
    assert (a * b).order == 2
    assert list(a * b) == [1, 0, 0]


def test_equality_compares_to_common_order():
    assert series(1, 2, 3) == series(1, 2, 3, 99)
    assert series(1, 2, 3) != series(1, 2, 4)


def test_catalan_square_identity():
    # c = 1 + x c^2
    c = series(*CATALAN)
    x = TruncatedSeries.x(c.order)
    assert c == 1 + x * c * c


def test_ring_axioms(make_series):
    for _ in range(50):
        a, b, c = (make_series(16) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == TruncatedSeries.zero(16)
        assert a * TruncatedSeries.one(16) == a


def test_division_round_trip(make_series):
    for _ in range(50):
        a = make_series(16)
        b = make_series(16)
        assert div(a, b) * b == a


def test_division_cancels_common_power_of_x():
    x = TruncatedSeries.x(6)
    quotient = x / (x - x * x)
    assert quotient.order == 5
    assert list(quotient) == [1] * 6


def test_division_by_non_unit():
    with pytest.raises(DivisionByNonUnit):
        div(TruncatedSeries.one(4), TruncatedSeries.x(4))
    with pytest.raises(DivisionByNonUnit):
        div(TruncatedSeries.one(4), TruncatedSeries.zero(4))


def test_div_x_power():
    assert list(div_x_power(series(0, 0, 3, 4), 2)) == [3, 4]
    with pytest.raises(NonzeroLowOrder) as info:
        div_x_power(series(0, 5, 3), 2)
    assert info.value.index == 1
    with pytest.raises(OrderTooSmall):
        div_x_power(series(0, 0), 3)


def test_shift_keeps_order():
    assert list(shift(series(1, 2, 3), 1)) == [0, 1, 2]


def test_truncate_refuses_to_extend():
    assert truncate(series(1, 2, 3), 1) == series(1, 2)
    with pytest.raises(OrderTooSmall):
        truncate(series(1, 2), 5)


def test_valuation_and_first_difference():
    assert valuation(series(0, 0, 7)) == 2
    assert valuation(TruncatedSeries.zero(4)) == 5
    assert first_difference(series(1, 2, 3), series(1, 2, 4)) == 2
    assert first_difference(series(1, 2), series(1, 2, 4)) is None


def test_derivative_and_negative_substitution():
    a = series(1, 2, 3, 4)
    assert list(derivative(a)) == [2, 6, 12]
    assert list(subst_neg(a)) == [1, -2, 3, -4]


def test_power_operator():
    one_plus_x = series(1, 1, order=5)
    assert list(one_plus_x ** 5) == [1, 5, 10, 10, 5, 1]
    assert one_plus_x ** 0 == TruncatedSeries.one(5)


def test_compose_geometric():
    geometric = TruncatedSeries.from_coeffs([1] * 8, 7)
    two_x = series(0, 2, order=7)
    assert list(compose(geometric, two_x)) == [2 ** n for n in range(8)]


def test_compose_requires_zero_constant():
    with pytest.raises(CompositionNonComposable):
        compose(series(1, 1), series(1, 1))


def test_comp_inverse_of_x_over_one_plus_x():
    # x/(1+x) inverts to x/(1-x)
    f = TruncatedSeries.x(8) / series(1, 1, order=8)
    assert list(comp_inverse(f)) == [0] + [1] * 8


def test_comp_inverse_catalan():
    # x c(x) inverts to x(1 - x)
    f = shift(series(*CATALAN), 1)
    assert comp_inverse(f) == series(0, 1, -1, order=9)


def test_comp_inverse_round_trip(make_series):
    for _ in range(50):
        f = make_series(16, valuation=1)
        if f[1] == 0:
            f = f + TruncatedSeries.x(16)
        fbar = comp_inverse(f)
        x = TruncatedSeries.x(16)
        assert compose(f, fbar) == x
        assert compose(fbar, f) == x


@pytest.mark.parametrize("f", [series(1, 1), series(0, 0, 1), series(0, order=0)])
def test_comp_inverse_rejects(f):
    with pytest.raises(NotInvertible):
        comp_inverse(f)


def test_sqrt_square_back(make_series):
    for _ in range(50):
        a = make_series(16, constant=1)
        root = sqrt(a)
        assert root * root == a
        assert root[0] == 1


def test_sqrt_of_nonunit_square_constant():
    root = sqrt(series(Fraction(9, 4), 3, 1))
    assert root[0] == Fraction(3, 2)
    assert root * root == series(Fraction(9, 4), 3, 1)


@pytest.mark.parametrize("constant", [0, -1, 2, Fraction(1, 3)])
def test_sqrt_rejects_non_square_constant(constant):
    with pytest.raises(NoRationalSqrt):
        sqrt(series(constant, 1, 1))


def test_scalar_operators():
    a = series(2, 4, 6)
    assert list(a / 2) == [1, 2, 3]
    assert list(3 * a) == [6, 12, 18]
    assert list(1 - a) == [-1, -4, -6]
    assert list(-a) == [-2, -4, -6]


def test_negative_substitution_is_involutive_homomorphism(make_series):
    for _ in range(50):
        a, b = make_series(16), make_series(16)
        assert subst_neg(subst_neg(a)) == a
        assert subst_neg(a + b) == subst_neg(a) + subst_neg(b)
        assert subst_neg(a * b) == subst_neg(a) * subst_neg(b)


def test_compose_pascal_row_sums():
    # 1/(1-x) at x/(1-x) is (1-x)/(1-2x)
    x = TruncatedSeries.x(10)
    composed = compose(1 / (1 - x), x / (1 - x))
    assert composed == (1 - x) / (1 - 2 * x)
    assert list(composed)[:6] == [1, 1, 2, 4, 8, 16]


def test_comp_inverse_of_x_minus_x_squared_is_shifted_catalan():
    x = TruncatedSeries.x(9)
    assert comp_inverse(x - x * x) == shift(series(*CATALAN), 1)


def test_sqrt_of_even_valuation():
    root = sqrt(series(0, 0, 1, order=6))
    assert root == series(0, 1, order=5)
    assert root.order == 5
    a = series(0, 0, 1, 2, 1, order=8)
    root = sqrt(a)
    assert root == series(0, 1, 1, order=7)
    assert root * root == a


def test_sqrt_rejects_odd_valuation():
    with pytest.raises(NoRationalSqrt) as info:
        sqrt(series(0, 0, 0, 1, order=6))
    assert info.value.valuation == 3


def test_sqrt_of_zero_series():
    root = sqrt(TruncatedSeries.zero(9))
    assert root.order == 4
    assert root.is_zero()
