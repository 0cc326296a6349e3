"""Rational functions in canonical form."""

from __future__ import annotations

from numbers import Rational

from ..errors import UsageError
from .gcd import gcd
from .poly import Poly


class RatFunc:
    """Quotient ``num/den`` of polynomials, stored coprime with a monic denominator.

    Monic (leading graded-lex coefficient 1) fixes the scalar ambiguity, so two
    equal functions always have identical ``num`` and ``den``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, Poly):
            raise UsageError("RatFunc numerator must be a Poly")
        if den is None:
            den = Poly.one(num.nvars)
        elif isinstance(den, (int, Rational)):
            den = Poly.const(num.nvars, den)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            num, den = num, Poly.one(num.nvars)
        elif not den.is_constant:
            g = gcd(num, den)
            if not g.is_constant:
                num, den = num.exact_div(g), den.exact_div(g)
        lc = den.leading_coeff()
        self.num = num.scale(1 / lc)
        self.den = den.scale(1 / lc)

    @property
    def nvars(self):
        return self.num.nvars

    def _lift(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc(other)
        if isinstance(other, (int, Rational)):
            return RatFunc(Poly.const(self.nvars, other))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.num.is_zero

    @property
    def is_zero(self):
        return self.num.is_zero

    def diff(self, index):
        n, d = self.num, self.den
        return RatFunc(n.diff(index) * d - n * d.diff(index), d * d)

    def evaluate(self, point):
        dv = self.den.evaluate(point)
        if dv == 0:
            raise ZeroDivisionError("denominator vanishes at the evaluation point")
        return self.num.evaluate(point) / dv

    def to_str(self, names=None):
        if self.den == 1:
            return self.num.to_str(names)
        return f"({self.num.to_str(names)})/({self.den.to_str(names)})"

    def __repr__(self):
        return f"RatFunc({self.to_str()!r})"
