"""
Riordan group elements, matrices and the involution predicates.
"""

from fractions import Fraction

import pytest

from riordan.core.errors import NotInRiordanGroup, OrderTooSmall
from riordan.core.series import TruncatedSeries
from riordan.expr.evaluate import evaluate_text
from riordan.group.element import (
    RiordanElement,
    bin_element,
    factor,
    identity,
    inverse,
    is_identity,
    is_involution,
    is_pseudo_involution,
    negate_f,
    power,
    product,
    reflection,
    substitute_negative,
)
from riordan.group.matrix import TriangleMatrix, matrix, row_sums

ORDER = 16


def element(g, f, order=ORDER):
    return RiordanElement(evaluate_text(g, order), evaluate_text(f, order))


# ═══════════════════════════════════════════════════════════════════
#                          GROUP AXIOMS
# ═══════════════════════════════════════════════════════════════════

def test_invariants_rejected():
    with pytest.raises(NotInRiordanGroup):
        element("x", "x")
    with pytest.raises(NotInRiordanGroup):
        element("1", "1+x")
    with pytest.raises(NotInRiordanGroup):
        element("1", "x^2")


def test_identity_is_neutral(make_element):
    for _ in range(10):
        a = make_element(ORDER)
        assert product(a, identity(ORDER)) == a
        assert product(identity(ORDER), a) == a


def test_associativity(make_element):
    for _ in range(10):
        a, b, c = (make_element(12) for _ in range(3))
        assert product(product(a, b), c) == product(a, product(b, c))


def test_inverse_both_sides(make_element):
    for _ in range(20):
        a = make_element(ORDER)
        assert is_identity(product(a, inverse(a)))
        assert is_identity(product(inverse(a), a))


def test_pascal_inverse_is_signed_pascal():
    pascal = bin_element(1, ORDER)
    assert inverse(pascal) == bin_element(-1, ORDER)


def test_power_and_operators(make_element):
    a = make_element(10)
    assert power(a, 3) == a * a * a
    assert power(a, -2) == inverse(a) * inverse(a)
    assert a ** 0 == identity(10)


def test_bin_subgroup_law():
    # bin(a) * bin(b) = bin(a + b)
    for a, b in [(1, 2), (Fraction(1, 2), -1), (3, -3)]:
        assert bin_element(a, ORDER) * bin_element(b, ORDER) == bin_element(a + b, ORDER)


def test_factorization(make_element):
    for _ in range(10):
        a = make_element(ORDER)
        left, right = factor(a)
        assert product(left, right) == a


def test_negative_substitution_is_reflection_product(make_element):
    for _ in range(20):
        a = make_element(ORDER)
        assert substitute_negative(a) == product(reflection(ORDER), a)


def test_negate_f_is_right_reflection(make_element):
    a = make_element(ORDER)
    assert negate_f(a) == product(a, reflection(ORDER))


# ═══════════════════════════════════════════════════════════════════
#                             MATRICES
# ═══════════════════════════════════════════════════════════════════

def test_pascal_matrix():
    m = matrix(element("1/(1-x)", "x/(1-x)"), 5)
    assert m.to_rows() == [
        ["1"],
        ["1", "1"],
        ["1", "2", "1"],
        ["1", "3", "3", "1"],
        ["1", "4", "6", "4", "1"],
    ]
    assert row_sums(m) == [1, 2, 4, 8, 16]


def test_matrix_requires_order():
    with pytest.raises(OrderTooSmall):
        matrix(element("1", "x", order=3), 6)


def test_matrix_product_consistency(make_element):
    rows = 10
    for _ in range(50):
        a, b = make_element(ORDER), make_element(ORDER)
        assert matrix(product(a, b), rows) == matrix(a, rows) @ matrix(b, rows)


def test_matrix_inverse_consistency(make_element):
    for _ in range(10):
        a = make_element(ORDER)
        assert matrix(inverse(a), 8) == matrix(a, 8).inverse()


def test_triangle_helpers():
    m = TriangleMatrix.from_rows([[1, 9, 9], [2, 3, 9], [4, 5, 6]])
    assert m.entry(0, 2) == 0
    assert m.column(1) == [3, 5]
    assert m.with_column_signs().to_rows() == [["1"], ["2", "-3"], ["4", "-5", "6"]]
    assert (m @ TriangleMatrix.identity(3)) == m
    assert m.first_difference(m.with_column_signs()) == (1, 1)
    with pytest.raises(ValueError):
        TriangleMatrix(((1, 2),))


# ═══════════════════════════════════════════════════════════════════
#                            PREDICATES
# ═══════════════════════════════════════════════════════════════════

def test_signed_binomial_is_involution():
    assert is_involution(element("1/(1-x)", "-x/(1-x)"))


def test_pascal_is_not_involution():
    check = is_involution(element("1/(1-x)", "x/(1-x)"))
    assert not check
    assert check.failing_order == 2
    assert check.component == "g"
    assert check.coefficient_index == 1


def test_pascal_is_pseudo_involution():
    assert is_pseudo_involution(element("1/(1-x)", "x/(1-x)"))


@pytest.mark.parametrize("alpha", [-2, -1, Fraction(1, 2), 1, 3])
def test_bin_elements_are_pseudo_involutions(alpha):
    assert is_pseudo_involution(bin_element(alpha, ORDER))


def test_identity_check_reports_values():
    check = is_identity(element("1+2*x", "x"))
    assert check.to_dict() == {
        "holds": False,
        "failing_order": 2,
        "component": "g",
        "expected": "0",
        "actual": "2",
    }


def test_identity_truncation_order():
    a = RiordanElement(TruncatedSeries.one(8), TruncatedSeries.x(5))
    assert a.order == 5
