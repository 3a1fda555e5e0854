"""
Riordan Kit - Core Configuration & Constants
============================================

Engine-wide settings and the enumerations shared by the expression
language, the constructions and the command-line front end.
"""

from __future__ import annotations

import os
import logging
from enum import Enum, IntEnum
from dataclasses import dataclass, replace

log = logging.getLogger("Riordan.Config")


class OutputFormat(Enum):
    """Report encodings understood by the exporter."""
    TABLE = "table"
    JSON = "json"
    CSV = "csv"


class Builtin(Enum):
    """
    Generating functions callable from the expression language.
    Each member carries its DSL name and a human description.
    """
    CATALAN = ("c", "Catalan numbers, c = (1 - sqrt(1-4x)) / (2x)")
    MOTZKIN = ("M", "Motzkin numbers, M = (1 - x - sqrt(1-2x-3x^2)) / (2x^2)")
    SCHROEDER = ("S", "large Schroeder numbers, S = (1 - x - sqrt(1-6x+x^2)) / (2x)")

    def __init__(self, symbol: str, description: str):
        self.symbol = symbol
        self.description = description

    @classmethod
    def from_symbol(cls, symbol: str) -> Builtin:
        for member in cls:
            if member.symbol == symbol:
                return member
        raise KeyError(symbol)


class Route(Enum):
    """Independent routes to the three-parameter involution."""
    PRODUCT = ("product", "closed product of the two Riordan factors")
    CONSTRUCTION = ("construction", "conjugation construction with P = (1, x)")
    CLOSED_FORM = ("closed-form", "radical closed forms")
    JFRACTION = ("jfraction", "predicted Jacobi continued fractions")

    def __init__(self, key: str, label: str):
        self.key = key
        self.label = label

    @classmethod
    def from_key(cls, key: str) -> Route:
        for member in cls:
            if member.key == key:
                return member
        raise KeyError(key)


class ExitCode(IntEnum):
    """Process exit codes of the command-line front end."""
    OK = 0
    USAGE = 1
    DOMAIN = 2
    CHECK_FAILED = 3


@dataclass(frozen=True)
class EngineConfig:
    """Immutable engine configuration parameters."""

    VERSION: str = "1.0.0"
    PROGRAM_NAME: str = "riordan"

    # Truncation
    DEFAULT_ORDER: int = 24
    DEFAULT_ROWS: int = 8
    ORDER_ENV_VAR: str = "RIORDAN_DEFAULT_ORDER"

    # Analysis depths
    DEFAULT_JFRACTION_DEPTH: int = 8
    DEFAULT_BSEQ_DEPTH: int = 5

    # Grid evaluation
    MAX_WORKERS: int = 4


def _order_from_environment(base: EngineConfig) -> EngineConfig:
    raw = os.environ.get(base.ORDER_ENV_VAR)
    if raw is None:
        return base
    try:
        order = int(raw)
    except ValueError:
        log.warning(f"Ignoring {base.ORDER_ENV_VAR}={raw!r}: not an integer")
        return base
    if order < 1:
        log.warning(f"Ignoring {base.ORDER_ENV_VAR}={order}: order must be positive")
        return base
    return replace(base, DEFAULT_ORDER=order)


# Global configuration instance
CONFIG = _order_from_environment(EngineConfig())
