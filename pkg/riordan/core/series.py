"""
Riordan Kit - Truncated Formal Power Series
===========================================

Exact power series over the rationals, truncated at an explicit order N:
- coefficients are fractions.Fraction, never floats
- every binary operation truncates to the smaller input order
- composition, compositional inverse (Lagrange inversion) and square root
- helpers for the x -> -x substitution and for cancelling powers of x

A series with order N knows the coefficients of x^0 .. x^N. Identities
between series are asserted modulo x^(N+1).
"""

from __future__ import annotations

import math
import logging
from fractions import Fraction
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .errors import (
    CompositionNonComposable,
    DivisionByNonUnit,
    NoRationalSqrt,
    NonzeroLowOrder,
    NotInvertible,
    OrderTooSmall,
)

log = logging.getLogger("Riordan.Series")

Scalar = Union[int, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """
    Coefficient vector (c_0, ..., c_N) of a power series known to order N.

    Instances are immutable. Equality compares coefficients up to the
    smaller of the two orders.
    """

    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def _raw(cls, coeffs: Sequence[Fraction]) -> TruncatedSeries:
        # Skips normalisation; callers pass Fractions only.
        series = object.__new__(cls)
        object.__setattr__(series, "coeffs", tuple(coeffs))
        return series

    # ═══════════════════════════════════════════════════════════════════
    #                           CONSTRUCTORS
    # ═══════════════════════════════════════════════════════════════════

    @classmethod
    def from_coeffs(cls, values: Iterable[Scalar], order: int) -> TruncatedSeries:
        """Build a series of the given order, zero-padding or truncating values."""
        if order < 0:
            raise ValueError(f"order must be nonnegative, got {order}")
        coeffs = [Fraction(v) for v in values][: order + 1]
        coeffs.extend([ZERO] * (order + 1 - len(coeffs)))
        return cls._raw(coeffs)

    @classmethod
    def constant(cls, value: Scalar, order: int) -> TruncatedSeries:
        return cls.from_coeffs([value], order)

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls.from_coeffs([], order)

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls.from_coeffs([1], order)

    @classmethod
    def x(cls, order: int) -> TruncatedSeries:
        return cls.from_coeffs([0, 1], order)

    # ═══════════════════════════════════════════════════════════════════
    #                            INSPECTION
    # ═══════════════════════════════════════════════════════════════════

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, index: int) -> Fraction:
        return self.coeffs[index]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    @property
    def valuation(self) -> int:
        """Index of the first nonzero coefficient, or order + 1 if none."""
        return valuation(self)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def first_difference(self, other: TruncatedSeries) -> Optional[int]:
        return first_difference(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return first_difference(self, other) is None

    __hash__ = None

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self.coeffs)
        return f"TruncatedSeries([{body}], order={self.order})"

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            power = "x" if i == 1 else f"x^{i}"
            if c == 1:
                terms.append(power)
            elif c == -1:
                terms.append(f"-{power}")
            else:
                terms.append(f"{c}*{power}")
        text = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"{text} + O(x^{self.order + 1})"

    # ═══════════════════════════════════════════════════════════════════
    #                            OPERATORS
    # ═══════════════════════════════════════════════════════════════════

    def _coerce(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return sub(self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return sub(other, self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(self, other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(self, ONE / Fraction(other))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return div(self, other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return div(other, self)

    def __neg__(self) -> TruncatedSeries:
        return neg(self)

    def __pow__(self, exponent: int) -> TruncatedSeries:
        return power(self, exponent)

    def __call__(self, inner: TruncatedSeries) -> TruncatedSeries:
        return compose(self, inner)


# ═══════════════════════════════════════════════════════════════════
#                          RING OPERATIONS
# ═══════════════════════════════════════════════════════════════════

def valuation(a: TruncatedSeries) -> int:
    for i, c in enumerate(a.coeffs):
        if c != 0:
            return i
    return a.order + 1


def first_difference(a: TruncatedSeries, b: TruncatedSeries) -> Optional[int]:
    """First coefficient index below min order where a and b differ."""
    for i in range(min(a.order, b.order) + 1):
        if a.coeffs[i] != b.coeffs[i]:
            return i
    return None


def truncate(a: TruncatedSeries, order: int) -> TruncatedSeries:
    if order > a.order:
        raise OrderTooSmall(order, a.order)
    if order == a.order:
        return a
    return TruncatedSeries._raw(a.coeffs[: order + 1])


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return TruncatedSeries._raw([a.coeffs[i] + b.coeffs[i] for i in range(n + 1)])


def sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return TruncatedSeries._raw([a.coeffs[i] - b.coeffs[i] for i in range(n + 1)])


def neg(a: TruncatedSeries) -> TruncatedSeries:
    return TruncatedSeries._raw([-c for c in a.coeffs])


def scale(a: TruncatedSeries, factor: Scalar) -> TruncatedSeries:
    factor = Fraction(factor)
    return TruncatedSeries._raw([factor * c for c in a.coeffs])


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to min(a.order, b.order)."""
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out: List[Fraction] = [ZERO] * (n + 1)
    for i in range(n + 1):
        ai = ac[i]
        if ai == 0:
            continue
        for j in range(n + 1 - i):
            bj = bc[j]
            if bj:
                out[i + j] += ai * bj
    return TruncatedSeries._raw(out)


def power(a: TruncatedSeries, exponent: int) -> TruncatedSeries:
    if exponent < 0:
        raise ValueError(f"exponent must be nonnegative, got {exponent}")
    result = TruncatedSeries.one(a.order)
    base = a
    while exponent:
        if exponent & 1:
            result = mul(result, base)
        exponent >>= 1
        if exponent:
            base = mul(base, base)
    return result


def div_x_power(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """Divide by x^k; the first k coefficients must vanish. Order drops by k."""
    if k < 0:
        raise ValueError(f"power must be nonnegative, got {k}")
    if k == 0:
        return a
    if k > a.order:
        raise OrderTooSmall(k, a.order)
    for i in range(k):
        if a.coeffs[i] != 0:
            raise NonzeroLowOrder(i, a.coeffs[i])
    return TruncatedSeries._raw(a.coeffs[k:])


def shift(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """Multiply by x^k keeping the order of a."""
    if k < 0:
        raise ValueError(f"shift must be nonnegative, got {k}")
    return TruncatedSeries._raw(([ZERO] * k + list(a.coeffs))[: a.order + 1])


def div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """
    Quotient q with q*b = a.

    When b(0) = 0 a common factor x^k is cancelled first (k = valuation of
    b), which lowers the result order by k.
    """
    n = min(a.order, b.order)
    a = truncate(a, n)
    b = truncate(b, n)
    kb = valuation(b)
    if kb > n:
        raise DivisionByNonUnit(valuation(a), kb)
    if kb > 0:
        ka = valuation(a)
        if ka < kb:
            raise DivisionByNonUnit(ka, kb)
        a = div_x_power(a, kb)
        b = div_x_power(b, kb)
        log.debug(f"Cancelled x^{kb} before division, order {n} -> {n - kb}")

    ac, bc = a.coeffs, b.coeffs
    inverse_b0 = ONE / bc[0]
    q: List[Fraction] = []
    for k in range(a.order + 1):
        acc = ac[k]
        for j in range(1, k + 1):
            bj = bc[j]
            if bj:
                acc -= bj * q[k - j]
        q.append(acc * inverse_b0)
    return TruncatedSeries._raw(q)


def derivative(a: TruncatedSeries) -> TruncatedSeries:
    """Formal derivative; the order drops by one."""
    if a.order == 0:
        raise OrderTooSmall(1, 0)
    return TruncatedSeries._raw([i * a.coeffs[i] for i in range(1, a.order + 1)])


def subst_neg(a: TruncatedSeries) -> TruncatedSeries:
    """a(-x): coefficient i multiplied by (-1)^i."""
    return TruncatedSeries._raw([c if i % 2 == 0 else -c for i, c in enumerate(a.coeffs)])


# ═══════════════════════════════════════════════════════════════════
#                     COMPOSITION & INVERSION
# ═══════════════════════════════════════════════════════════════════

def compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """outer(inner(x)) by Horner accumulation; inner must vanish at 0."""
    if inner.coeffs[0] != 0:
        raise CompositionNonComposable(inner.coeffs[0])
    n = min(outer.order, inner.order)
    inner = truncate(inner, n)
    oc = outer.coeffs
    result = TruncatedSeries.constant(oc[n], n)
    for i in range(n - 1, -1, -1):
        product = mul(result, inner)
        result = TruncatedSeries._raw((product.coeffs[0] + oc[i],) + product.coeffs[1:])
    return result


def comp_inverse(f: TruncatedSeries) -> TruncatedSeries:
    """
    Compositional inverse by Lagrange inversion:
    [x^n] fbar = (1/n) [x^(n-1)] (x / f)^n.
    """
    if f.coeffs[0] != 0:
        raise NotInvertible(f"f(0) = {f.coeffs[0]}")
    if f.order < 1:
        raise NotInvertible("order 0 carries no linear coefficient")
    if f.coeffs[1] == 0:
        raise NotInvertible("f'(0) = 0")

    n = f.order
    phi = div(TruncatedSeries.one(n - 1), div_x_power(f, 1))
    coeffs: List[Fraction] = [ZERO] * (n + 1)
    phi_power = phi
    for k in range(1, n + 1):
        coeffs[k] = phi_power.coeffs[k - 1] / k
        if k < n:
            phi_power = mul(phi_power, phi)
    return TruncatedSeries._raw(coeffs)


# ═══════════════════════════════════════════════════════════════════
#                            RADICALS
# ═══════════════════════════════════════════════════════════════════

def _rational_sqrt(value: Fraction) -> Optional[Fraction]:
    if value <= 0:
        return None
    num, den = value.numerator, value.denominator
    root_num, root_den = math.isqrt(num), math.isqrt(den)
    if root_num * root_num != num or root_den * root_den != den:
        return None
    return Fraction(root_num, root_den)


def sqrt(a: TruncatedSeries) -> TruncatedSeries:
    """
    Square root with a nonnegative leading coefficient.

    a = x^(2m) b with b(0) a nonzero rational square has the root
    x^m sqrt(b), known to order N - m. A series zero to working order has
    the zero root to order N // 2.
    """
    v = valuation(a)
    if v > a.order:
        return TruncatedSeries.zero(a.order // 2)
    if v % 2:
        raise NoRationalSqrt(a.coeffs[v], v)
    b = div_x_power(a, v)
    root = _rational_sqrt(b.coeffs[0])
    if root is None:
        raise NoRationalSqrt(b.coeffs[0], v)
    bc = b.coeffs
    s: List[Fraction] = [root]
    inverse_twice_root = ONE / (2 * root)
    for k in range(1, b.order + 1):
        acc = bc[k]
        for j in range(1, k):
            acc -= s[j] * s[k - j]
        s.append(acc * inverse_twice_root)
    return TruncatedSeries._raw([ZERO] * (v // 2) + s)
