"""Riordan Kit Core - Configuration, errors, parameters and the series ring"""

from .config import (
    CONFIG,
    EngineConfig,
    OutputFormat,
    Builtin,
    Route,
    ExitCode
)
from .errors import (
    RiordanError,
    SeriesError,
    DivisionByNonUnit,
    CompositionNonComposable,
    NotInvertible,
    NoRationalSqrt,
    NonzeroLowOrder,
    OrderTooSmall,
    NotInRiordanGroup,
    NotPseudoInvolution,
    Degenerate,
    NonUnitConstant,
    BadNormalization,
    ParseError,
    CheckFailed
)
from .params import FamilyParams
from .series import (
    TruncatedSeries,
    add,
    sub,
    neg,
    scale,
    mul,
    div,
    power,
    compose,
    comp_inverse,
    sqrt,
    div_x_power,
    subst_neg,
    derivative,
    shift,
    truncate,
    valuation,
    first_difference
)

__all__ = [
    "CONFIG",
    "EngineConfig",
    "OutputFormat",
    "Builtin",
    "Route",
    "ExitCode",
    "RiordanError",
    "SeriesError",
    "DivisionByNonUnit",
    "CompositionNonComposable",
    "NotInvertible",
    "NoRationalSqrt",
    "NonzeroLowOrder",
    "OrderTooSmall",
    "NotInRiordanGroup",
    "NotPseudoInvolution",
    "Degenerate",
    "NonUnitConstant",
    "BadNormalization",
    "ParseError",
    "CheckFailed",
    "FamilyParams",
    "TruncatedSeries",
    "add",
    "sub",
    "neg",
    "scale",
    "mul",
    "div",
    "power",
    "compose",
    "comp_inverse",
    "sqrt",
    "div_x_power",
    "subst_neg",
    "derivative",
    "shift",
    "truncate",
    "valuation",
    "first_difference"
]
