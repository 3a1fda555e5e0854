"""
Workbench facade over expression text.
"""

import pytest

from riordan.core.errors import NotPseudoInvolution
from riordan.core.params import FamilyParams
from riordan.group.element import is_involution


def test_element_and_matrix(bench):
    pascal = bench.element("1/(1-x)", "x/(1-x)")
    assert bench.matrix(pascal, 4).to_rows()[3] == ["1", "3", "3", "1"]
    assert bench.row_sums(pascal, 4) == [1, 2, 4, 8]


def test_product_with_inverse_is_identity(bench):
    a = bench.element("1/(1-x)^2", "x/(1+x)")
    assert bench.product(a, bench.inverse(a)) == bench.element("1", "x")


def test_checks(bench):
    assert bench.check_involution("1/(1-x)", "-x/(1-x)")
    assert not bench.check_involution("1/(1-x)", "x/(1-x)")
    assert bench.check_pseudo_involution("1/(1-x)", "x/(1-x)")


def test_construct_with_default_pseudo_involution(bench):
    result = bench.construct("M(x)", "x*M(x)")
    assert is_involution(result)


def test_construct_checks_pseudo_involution(bench):
    with pytest.raises(NotPseudoInvolution):
        bench.construct("c(x)", "x*c(x)", "1/(1-x)", "x")
    bench.construct("c(x)", "x*c(x)", "1/(1-x)", "x", unchecked=True)


def test_family_and_corollary_agree(bench):
    assert bench.family(FamilyParams.of(2, 0, 1)) == bench.corollary(2, 1)


def test_orthogonal_arrays(bench):
    element, recurrence = bench.ortho(1, 1)
    assert recurrence.polynomials(3) == [list(row) for row in bench.matrix(element, 3).rows]
    element, _ = bench.chebyshev(0, 0, 0, 0)
    assert element == bench.element("1", "x")


def test_analysis(bench):
    assert bench.jfraction("M(x)", 4).alphas == (1, 1, 1, 1)
    assert bench.bsequence("-x*S(x)^2", 3, companion=True).terms == (4, 4, 4)
    reports = bench.cross_validate([FamilyParams.of(1, 0, 1), FamilyParams.of(2, 3, -1)], workers=2)
    assert [str(r.params) for r in reports] == ["(1, 0, 1)", "(2, 3, -1)"]
