"""Exact scalars and first-order jets.

Rational numbers are `fractions.Fraction` throughout: arbitrary precision,
always in lowest terms, positive denominator.  The wire format is the decimal
string "p/q" with "/q" omitted when q = 1, which is exactly what
`str(Fraction)` produces; `parse_scalar` is the inverse.

`JetScalar` is a truncated first-order jet a + b*eps with eps^2 = 0.  It is
the exact-differentiation workhorse: pushing a jet with derivative part 1
through a rational map reads off one directional derivative with no rounding
and no symbolic expansion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def parse_scalar(text: str) -> Fraction:
    return Fraction(text.strip())


def format_scalar(x: Fraction) -> str:
    return str(x)


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"cannot interpret {x!r} as an exact scalar")


@dataclass(frozen=True)
class JetScalar:
    """a + b*eps with eps^2 = 0; value/derivative are exact rationals."""

    value: Fraction
    deriv: Fraction = Fraction(0)

    @staticmethod
    def lift(x) -> "JetScalar":
        if isinstance(x, JetScalar):
            return x
        return JetScalar(as_fraction(x))

    @staticmethod
    def variable(x, direction=1) -> "JetScalar":
        return JetScalar(as_fraction(x), as_fraction(direction))

    def __add__(self, other):
        o = JetScalar.lift(other)
        return JetScalar(self.value + o.value, self.deriv + o.deriv)

    __radd__ = __add__

    def __neg__(self):
        return JetScalar(-self.value, -self.deriv)

    def __sub__(self, other):
        return self + (-JetScalar.lift(other))

    def __rsub__(self, other):
        return JetScalar.lift(other) + (-self)

    def __mul__(self, other):
        o = JetScalar.lift(other)
        return JetScalar(self.value * o.value,
                         self.value * o.deriv + self.deriv * o.value)

    __rmul__ = __mul__

    def reciprocal(self) -> "JetScalar":
        if self.value == 0:
            raise ZeroDivisionError("jet with zero value part is not invertible")
        inv = 1 / self.value
        return JetScalar(inv, -self.deriv * inv * inv)

    def __truediv__(self, other):
        return self * JetScalar.lift(other).reciprocal()

    def __rtruediv__(self, other):
        return JetScalar.lift(other) * self.reciprocal()

    def __pow__(self, n: int):
        if n < 0:
            return self.reciprocal() ** (-n)
        out = JetScalar(Fraction(1))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self) -> bool:
        return bool(self.value) or bool(self.deriv)
