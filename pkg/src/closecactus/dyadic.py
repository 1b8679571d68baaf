"""Exact arithmetic on dyadic rationals (numerator over a power of two).

Closeness totals are sums of powers of 1/2, so they always live in this
set, and it is closed under addition, subtraction and multiplication.
Using exact integers instead of floats keeps tie detection reliable: the
extremal searches compare values whose common denominator grows like
2^(n-1), well past double precision.
"""

from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction
from functools import total_ordering


@total_ordering
class DyadicRational:
    """Immutable exact value ``num / 2**exp``.

    Normalized so that ``exp == 0`` or ``num`` is odd (and zero is
    stored as ``(0, 0)``), which makes the representation unique and
    equality a plain field comparison.
    """

    __slots__ = ("num", "exp")

    def __init__(self, num: int, exp: int = 0):
        if exp < 0:
            raise ValueError("exponent must be non-negative")
        while num and exp and not num & 1:
            num >>= 1
            exp -= 1
        if num == 0:
            exp = 0
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "exp", exp)

    def __setattr__(self, name, value):
        raise AttributeError("DyadicRational is immutable")

    @classmethod
    def half_power(cls, d: int) -> "DyadicRational":
        """2**-d for d >= 0."""
        return cls(1, d)

    def _aligned(self, other: "DyadicRational") -> tuple[int, int, int]:
        e = max(self.exp, other.exp)
        return self.num << (e - self.exp), other.num << (e - other.exp), e

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, e = self._aligned(other)
        return DyadicRational(a + b, e)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, e = self._aligned(other)
        return DyadicRational(a - b, e)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return DyadicRational(self.num * other.num, self.exp + other.exp)

    __rmul__ = __mul__

    def __neg__(self):
        return DyadicRational(-self.num, self.exp)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.exp == other.exp

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, _ = self._aligned(other)
        return a < b

    def __hash__(self):
        return hash((self.num, self.exp))

    def __bool__(self):
        return self.num != 0

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, 1 << self.exp)

    def exact_str(self) -> str:
        """Reduced exact rendering: ``"21/2"``, ``"5"``, ``"-3/8"``."""
        if self.exp == 0:
            return str(self.num)
        return f"{self.num}/{1 << self.exp}"

    def decimal_str(self, digits: int = 15) -> str:
        """Decimal rendering rounded to ``digits`` significant digits."""
        with localcontext() as ctx:
            ctx.prec = digits
            return str(Decimal(self.num) / (Decimal(2) ** self.exp))

    def __str__(self):
        return self.exact_str()

    def __repr__(self):
        return f"DyadicRational({self.num}, {self.exp})"


def _coerce(value):
    if isinstance(value, DyadicRational):
        return value
    if isinstance(value, int):
        return DyadicRational(value)
    return NotImplemented


ZERO = DyadicRational(0)
ONE = DyadicRational(1)


def dyadic_sum(values) -> DyadicRational:
    total = ZERO
    for v in values:
        total = total + v
    return total
