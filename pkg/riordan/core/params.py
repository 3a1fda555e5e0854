"""Parameters of the three-parameter involution family."""

from __future__ import annotations

from fractions import Fraction
from dataclasses import dataclass
from typing import Dict, Union

RationalLike = Union[int, Fraction, str]


@dataclass(frozen=True)
class FamilyParams:
    """
    Rational triple (r, s, t).

    The family is usually quoted for integer r and s, but t = 1/2 and
    s = 1/4 occur in practice, so all three are arbitrary rationals.
    """

    r: Fraction
    s: Fraction
    t: Fraction

    @classmethod
    def of(cls, r: RationalLike, s: RationalLike, t: RationalLike) -> FamilyParams:
        return cls(Fraction(r), Fraction(s), Fraction(t))

    @classmethod
    def parse(cls, text: str) -> FamilyParams:
        """Parse "r,s,t", each component an integer or p/q literal."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 3:
            raise ValueError(f"expected three comma-separated rationals, got {text!r}")
        return cls.of(*parts)

    # D(x) = 1 + d1 x + d2 x^2 and N(x) = 1 + n1 x + n2 x^2
    @property
    def d1(self) -> Fraction:
        return self.r + 2 * self.t

    @property
    def d2(self) -> Fraction:
        return self.r * self.t + self.s + self.t * self.t

    @property
    def n1(self) -> Fraction:
        return -(self.r - 2 * self.t)

    @property
    def n2(self) -> Fraction:
        return -(self.r * self.t - self.s - self.t * self.t)

    @property
    def tail_beta(self) -> Fraction:
        """s + t(r + t), the constant tail of both continued fractions."""
        return self.s + self.t * (self.r + self.t)

    def to_dict(self) -> Dict[str, str]:
        return {"r": str(self.r), "s": str(self.s), "t": str(self.t)}

    def __str__(self) -> str:
        return f"({self.r}, {self.s}, {self.t})"
