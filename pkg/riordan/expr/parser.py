"""
Riordan Kit - Expression Parser
===============================

Recursive-descent parser for the small language used to specify g(x) and
f(x) on the command line and in fixtures.

Grammar:
    expr     := term (('+' | '-') term)*
    term     := factor (('*' | '/') factor)*
    factor   := '-' factor | atom ('^' nat)?
    atom     := rational | 'x' | '(' expr ')' | 'sqrt' '(' expr ')'
              | ident '(' expr ')'
    ident    := 'c' | 'M' | 'S'
    rational := int ('/' posint)?

'^' binds tighter than unary minus, so "-x^2" is -(x^2). A literal
"p/q" is read as one rational whenever a number follows the slash.
"""

from __future__ import annotations

import logging
from enum import Enum
from fractions import Fraction
from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..core.config import Builtin
from ..core.errors import ParseError

log = logging.getLogger("Riordan.Expr")


class NodeKind(Enum):
    """Kinds of expression tree nodes."""
    LITERAL = "literal"
    VARIABLE = "variable"
    ADD = "+"
    SUB = "-"
    MUL = "*"
    DIV = "/"
    POW = "^"
    NEG = "neg"
    SQRT = "sqrt"
    CALL = "call"


BINARY_KINDS = (NodeKind.ADD, NodeKind.SUB, NodeKind.MUL, NodeKind.DIV)


@dataclass(frozen=True)
class ExprAst:
    """
    Expression tree node.

    Only the field matching the kind is set: value for literals, exponent
    for powers, name (builtin symbol) for calls.
    """

    kind: NodeKind
    children: Tuple[ExprAst, ...] = ()
    value: Optional[Fraction] = None
    exponent: Optional[int] = None
    name: Optional[str] = None

    @classmethod
    def literal(cls, value) -> ExprAst:
        return cls(NodeKind.LITERAL, value=Fraction(value))

    @classmethod
    def variable(cls) -> ExprAst:
        return cls(NodeKind.VARIABLE)

    @classmethod
    def binary(cls, kind: NodeKind, left: ExprAst, right: ExprAst) -> ExprAst:
        if kind not in BINARY_KINDS:
            raise ValueError(f"{kind} is not a binary operator")
        return cls(kind, children=(left, right))

    @classmethod
    def pow(cls, base: ExprAst, exponent: int) -> ExprAst:
        if exponent < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {exponent}")
        return cls(NodeKind.POW, children=(base,), exponent=exponent)

    @classmethod
    def neg(cls, operand: ExprAst) -> ExprAst:
        return cls(NodeKind.NEG, children=(operand,))

    @classmethod
    def sqrt(cls, operand: ExprAst) -> ExprAst:
        return cls(NodeKind.SQRT, children=(operand,))

    @classmethod
    def call(cls, name: str, argument: ExprAst) -> ExprAst:
        Builtin.from_symbol(name)
        return cls(NodeKind.CALL, children=(argument,), name=name)


# ═══════════════════════════════════════════════════════════════════
#                             TOKENIZER
# ═══════════════════════════════════════════════════════════════════

class TokenType(Enum):
    NUMBER = "number"
    IDENT = "identifier"
    PLUS = "'+'"
    MINUS = "'-'"
    STAR = "'*'"
    SLASH = "'/'"
    CARET = "'^'"
    LPAREN = "'('"
    RPAREN = "')'"
    EOF = "end of input"


_SINGLE_CHAR = {
    "+": TokenType.PLUS,
    "-": TokenType.MINUS,
    "*": TokenType.STAR,
    "/": TokenType.SLASH,
    "^": TokenType.CARET,
    "(": TokenType.LPAREN,
    ")": TokenType.RPAREN,
}

_DIGITS = "0123456789"

FUNCTION_NAMES = ("sqrt",) + tuple(b.symbol for b in Builtin)


@dataclass(frozen=True)
class Token:
    type: TokenType
    text: str
    position: int

    def describe(self) -> str:
        if self.type is TokenType.EOF:
            return "end of input"
        return repr(self.text)


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in _DIGITS:
            start = i
            while i < len(text) and text[i] in _DIGITS:
                i += 1
            tokens.append(Token(TokenType.NUMBER, text[start:i], start))
        elif ch.isascii() and ch.isalpha():
            start = i
            while i < len(text) and text[i].isascii() and text[i].isalnum():
                i += 1
            tokens.append(Token(TokenType.IDENT, text[start:i], start))
        elif ch in _SINGLE_CHAR:
            tokens.append(Token(_SINGLE_CHAR[ch], ch, i))
            i += 1
        else:
            raise ParseError(i, ["a number, 'x', an operator or a parenthesis"], repr(ch))
    tokens.append(Token(TokenType.EOF, "", len(text)))
    return tokens


# ═══════════════════════════════════════════════════════════════════
#                              PARSER
# ═══════════════════════════════════════════════════════════════════

class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.index = 0

    def peek(self, ahead: int = 0) -> Token:
        return self.tokens[min(self.index + ahead, len(self.tokens) - 1)]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, token_type: TokenType, description: Optional[str] = None) -> Token:
        token = self.peek()
        if token.type is not token_type:
            raise ParseError(token.position, [description or token_type.value], token.describe())
        return self.advance()

    def parse(self) -> ExprAst:
        node = self.expr()
        token = self.peek()
        if token.type is not TokenType.EOF:
            raise ParseError(token.position, ["an operator", "end of input"], token.describe())
        return node

    def expr(self) -> ExprAst:
        node = self.term()
        while self.peek().type in (TokenType.PLUS, TokenType.MINUS):
            kind = NodeKind.ADD if self.advance().type is TokenType.PLUS else NodeKind.SUB
            node = ExprAst.binary(kind, node, self.term())
        return node

    def term(self) -> ExprAst:
        node = self.factor()
        while self.peek().type in (TokenType.STAR, TokenType.SLASH):
            kind = NodeKind.MUL if self.advance().type is TokenType.STAR else NodeKind.DIV
            node = ExprAst.binary(kind, node, self.factor())
        return node

    def factor(self) -> ExprAst:
        if self.peek().type is TokenType.MINUS:
            self.advance()
            return ExprAst.neg(self.factor())
        base = self.atom()
        if self.peek().type is TokenType.CARET:
            self.advance()
            exponent = self.expect(TokenType.NUMBER, "a nonnegative integer exponent")
            return ExprAst.pow(base, int(exponent.text))
        return base

    def atom(self) -> ExprAst:
        token = self.peek()
        if token.type is TokenType.NUMBER:
            return self.rational()
        if token.type is TokenType.LPAREN:
            self.advance()
            node = self.expr()
            self.expect(TokenType.RPAREN)
            return node
        if token.type is TokenType.IDENT:
            if token.text == "x":
                self.advance()
                return ExprAst.variable()
            if token.text in FUNCTION_NAMES:
                self.advance()
                self.expect(TokenType.LPAREN)
                argument = self.expr()
                self.expect(TokenType.RPAREN)
                if token.text == "sqrt":
                    return ExprAst.sqrt(argument)
                return ExprAst.call(token.text, argument)
            raise ParseError(
                token.position, ["'x'"] + [f"'{name}('" for name in FUNCTION_NAMES], token.describe()
            )
        raise ParseError(token.position, ["a number", "'x'", "'('", "a function call"], token.describe())

    def rational(self) -> ExprAst:
        numerator = int(self.advance().text)
        if self.peek().type is TokenType.SLASH and self.peek(1).type is TokenType.NUMBER:
            self.advance()
            token = self.advance()
            denominator = int(token.text)
            if denominator == 0:
                raise ParseError(token.position, ["a positive integer denominator"], token.describe())
            return ExprAst.literal(Fraction(numerator, denominator))
        return ExprAst.literal(numerator)


def parse(text: str) -> ExprAst:
    """Parse expression text into an ExprAst, raising ParseError on bad input."""
    ast = _Parser(text).parse()
    log.debug(f"Parsed {text!r}")
    return ast


# ═══════════════════════════════════════════════════════════════════
#                              PRINTER
# ═══════════════════════════════════════════════════════════════════

def format_expr(ast: ExprAst) -> str:
    """
    Render an ExprAst as fully parenthesised text that parses back to the
    same tree. Right operands of '/' are always parenthesised so that a
    literal there is never read as part of a p/q rational.
    """
    kind = ast.kind
    if kind is NodeKind.LITERAL:
        return str(ast.value)
    if kind is NodeKind.VARIABLE:
        return "x"
    if kind in BINARY_KINDS:
        left, right = ast.children
        right_text = format_expr(right)
        if kind is NodeKind.DIV:
            right_text = f"({right_text})"
        return f"({format_expr(left)} {kind.value} {right_text})"
    if kind is NodeKind.POW:
        return f"({format_expr(ast.children[0])})^{ast.exponent}"
    if kind is NodeKind.NEG:
        return f"-({format_expr(ast.children[0])})"
    if kind is NodeKind.SQRT:
        return f"sqrt({format_expr(ast.children[0])})"
    return f"{ast.name}({format_expr(ast.children[0])})"
