"""Riordan Kit Expressions - DSL for specifying g(x) and f(x)"""

from .parser import (
    ExprAst,
    NodeKind,
    Token,
    TokenType,
    tokenize,
    parse,
    format_expr
)
from .evaluate import evaluate, evaluate_text, builtin_series

__all__ = [
    "ExprAst",
    "NodeKind",
    "Token",
    "TokenType",
    "tokenize",
    "parse",
    "format_expr",
    "evaluate",
    "evaluate_text",
    "builtin_series"
]
