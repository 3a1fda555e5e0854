"""
Expression language: tokenizer, parser, printer and evaluation.
"""

import random
from fractions import Fraction

import pytest

from riordan.core.config import Builtin
from riordan.core.errors import CompositionNonComposable, NoRationalSqrt, ParseError
from riordan.expr.evaluate import builtin_series, evaluate, evaluate_text
from riordan.expr.parser import ExprAst, NodeKind, TokenType, format_expr, parse, tokenize


def coefficients(text, order):
    return list(evaluate_text(text, order))


# ═══════════════════════════════════════════════════════════════════
#                              PARSING
# ═══════════════════════════════════════════════════════════════════

def test_tokenize_positions():
    tokens = tokenize("1/(1 - x)")
    assert [t.type for t in tokens] == [
        TokenType.NUMBER, TokenType.SLASH, TokenType.LPAREN, TokenType.NUMBER,
        TokenType.MINUS, TokenType.IDENT, TokenType.RPAREN, TokenType.EOF,
    ]
    assert tokens[5].position == 7


def test_rational_literal_binds_slash():
    ast = parse("1/2*x")
    assert ast.kind is NodeKind.MUL
    assert ast.children[0] == ExprAst.literal(Fraction(1, 2))


def test_division_by_parenthesised_expression():
    ast = parse("1/(1-x)")
    assert ast.kind is NodeKind.DIV


def test_power_binds_tighter_than_unary_minus():
    assert parse("-x^2") == ExprAst.neg(ExprAst.pow(ExprAst.variable(), 2))


def test_builtin_call():
    ast = parse("c(x)")
    assert ast.kind is NodeKind.CALL and ast.name == "c"


@pytest.mark.parametrize(
    "text, position",
    [
        ("1 + ", 4),
        ("(1 - x", 6),
        ("x $ 2", 2),
        ("y + 1", 0),
        ("x^x", 2),
        ("1/0", 2),
        ("x x", 2),
        ("sqrt(", 5),
        ("\u00b2+x", 0),
        ("x+\u0663", 2),
        ("\u00e9", 0),
    ],
)
def test_parse_errors_report_position(text, position):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.position == position
    assert info.value.expected


def _random_ast(rng: random.Random, depth: int) -> ExprAst:
    if depth == 0 or rng.random() < 0.25:
        if rng.random() < 0.5:
            return ExprAst.variable()
        return ExprAst.literal(Fraction(rng.randint(0, 9), rng.randint(1, 4)))
    choice = rng.randrange(8)
    if choice < 4:
        kind = (NodeKind.ADD, NodeKind.SUB, NodeKind.MUL, NodeKind.DIV)[choice]
        return ExprAst.binary(kind, _random_ast(rng, depth - 1), _random_ast(rng, depth - 1))
    if choice == 4:
        return ExprAst.pow(_random_ast(rng, depth - 1), rng.randint(0, 3))
    if choice == 5:
        return ExprAst.neg(_random_ast(rng, depth - 1))
    if choice == 6:
        return ExprAst.sqrt(_random_ast(rng, depth - 1))
    return ExprAst.call(rng.choice("cMS"), _random_ast(rng, depth - 1))


def test_format_parse_round_trip(rng):
    for _ in range(100):
        ast = _random_ast(rng, 4)
        assert parse(format_expr(ast)) == ast


# ═══════════════════════════════════════════════════════════════════
#                             EVALUATION
# ═══════════════════════════════════════════════════════════════════

def test_catalan_squared():
    assert coefficients("c(x)*c(x)", 4) == [1, 2, 5, 14, 42]


@pytest.mark.parametrize(
    "builtin, expected",
    [
        (Builtin.CATALAN, [1, 1, 2, 5, 14, 42, 132]),
        (Builtin.MOTZKIN, [1, 1, 2, 4, 9, 21, 51]),
        (Builtin.SCHROEDER, [1, 2, 6, 22, 90, 394, 1806]),
    ],
)
def test_builtins(builtin, expected):
    assert list(builtin_series(builtin, 6)) == expected
    assert coefficients(f"{builtin.symbol}(x)", 6) == expected


def test_motzkin_to_order_five():
    assert coefficients("M(x)", 5) == [1, 1, 2, 4, 9, 21]


def test_schroeder_quadratic_identity():
    s = evaluate_text("S(x)", 12)
    x = evaluate_text("x", 12)
    assert (x * s * s + (x - 1) * s + 1).is_zero()


def test_pascal_column_generator():
    assert coefficients("1/(1-x)", 5) == [1] * 6
    assert coefficients("x/(1-x)^2", 5) == [0, 1, 2, 3, 4, 5]


def test_sqrt_expression():
    assert coefficients("sqrt(1-4*x)", 3) == [1, -2, -2, -4]


def test_builtin_argument_must_vanish_at_zero():
    with pytest.raises(CompositionNonComposable):
        evaluate_text("c(1+x)", 4)


def test_sqrt_without_rational_root():
    with pytest.raises(NoRationalSqrt):
        evaluate_text("sqrt(2+x)", 4)


def test_rational_coefficients():
    assert coefficients("1/(1-1/2*x)", 3) == [1, Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)]


def test_evaluate_matches_evaluate_text():
    ast = parse("c(x^2/(1+x)^4)/(1+x)^2")
    assert evaluate(ast, 10) == evaluate_text("c(x^2/(1+x)^4)/(1+x)^2", 10)
