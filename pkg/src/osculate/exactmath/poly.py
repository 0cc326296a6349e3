"""Sparse multivariate polynomials over the rationals.

A :class:`Poly` maps exponent tuples to :class:`fractions.Fraction`
coefficients.  Zero coefficients are never stored.  Terms are iterated in
graded lexicographic order, largest first, and the same order defines the
leading term.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from numbers import Rational

from ..errors import UsageError


def grlex_key(mono):
    """Sort key for graded lexicographic order (total degree, then lex)."""
    return (sum(mono), mono)


def _add_monos(a, b):
    return tuple(x + y for x, y in zip(a, b))


class Poly:
    """Immutable sparse polynomial in ``nvars`` variables with rational coefficients.

    >>> x, y = Poly.var(2, 0), Poly.var(2, 1)
    >>> (x**2 * y).diff(0) == 2 * x * y
    True
    """

    __slots__ = ("nvars", "_terms", "_order", "_hash")

    def __init__(self, nvars, terms=None):
        if nvars < 1:
            raise UsageError("a polynomial needs at least one variable")
        self.nvars = nvars
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                mono = tuple(mono)
                if len(mono) != nvars or any(e < 0 for e in mono):
                    raise UsageError(f"bad exponent vector {mono!r} for {nvars} variables")
                coeff = Fraction(coeff)
                if coeff:
                    clean[mono] = clean.get(mono, 0) + coeff
            clean = {m: c for m, c in clean.items() if c}
        self._terms = clean
        self._order = None
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        # trusted constructor: terms already clean
        p = object.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._order = None
        p._hash = None
        return p

    # construction helpers

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, nvars, value):
        value = Fraction(value)
        return cls._raw(nvars, {(0,) * nvars: value} if value else {})

    @classmethod
    def one(cls, nvars):
        return cls.const(nvars, 1)

    @classmethod
    def var(cls, nvars, index):
        if not 0 <= index < nvars:
            raise UsageError(f"variable index {index} out of range for {nvars} variables")
        mono = tuple(1 if i == index else 0 for i in range(nvars))
        return cls._raw(nvars, {mono: Fraction(1)})

    @classmethod
    def monomial(cls, mono, coeff=1):
        mono = tuple(mono)
        return cls(len(mono), {mono: coeff})

    # inspection

    def terms(self):
        """List of ``(mono, coeff)`` pairs in descending graded-lex order."""
        if self._order is None:
            self._order = sorted(self._terms.items(), key=lambda mc: grlex_key(mc[0]), reverse=True)
        return self._order

    def coeff(self, mono):
        return self._terms.get(tuple(mono), Fraction(0))

    @property
    def is_zero(self):
        return not self._terms

    @property
    def is_constant(self):
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def constant_value(self):
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def total_degree(self):
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def degree_in(self, index):
        return max((m[index] for m in self._terms), default=-1)

    def is_homogeneous(self):
        return len({sum(m) for m in self._terms}) <= 1

    def leading_term(self):
        if not self._terms:
            raise UsageError("the zero polynomial has no leading term")
        return self.terms()[0]

    def leading_coeff(self):
        return self.leading_term()[1]

    def __len__(self):
        return len(self._terms)

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise UsageError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Rational)):
            return Poly.const(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Poly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def scale(self, factor):
        factor = Fraction(factor)
        if not factor:
            return Poly.zero(self.nvars)
        return Poly._raw(self.nvars, {m: c * factor for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _add_monos(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly._raw(self.nvars, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise UsageError("polynomial exponent must be a non-negative integer")
        result = Poly.one(self.nvars)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(1 / Fraction(other))
        return self.exact_div(other)

    def exact_div(self, other):
        """Quotient ``self / other``; raises ``ArithmeticError`` if the division is not exact."""
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if other.is_constant:
            return self.scale(1 / other.constant_value())
        lead_m, lead_c = other.leading_term()
        rest = [(m, c) for m, c in other._terms.items() if m != lead_m]
        rem = dict(self._terms)
        quot = {}
        while rem:
            m = max(rem, key=grlex_key)
            shift = tuple(a - b for a, b in zip(m, lead_m))
            if min(shift) < 0:
                raise ArithmeticError("polynomial division is not exact")
            f = rem.pop(m) / lead_c
            quot[shift] = f
            for m2, c2 in rest:
                mm = _add_monos(shift, m2)
                v = rem.get(mm, 0) - f * c2
                if v:
                    rem[mm] = v
                else:
                    rem.pop(mm, None)
        return Poly._raw(self.nvars, quot)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self.is_constant and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # calculus and evaluation

    def diff(self, index):
        """Formal partial derivative with respect to variable ``index``."""
        if not 0 <= index < self.nvars:
            raise UsageError(f"variable index {index} out of range for {self.nvars} variables")
        out = {}
        for m, c in self._terms.items():
            e = m[index]
            if e:
                mm = m[:index] + (e - 1,) + m[index + 1:]
                out[mm] = c * e
        return Poly._raw(self.nvars, out)

    def diff_multi(self, alpha):
        """Apply ``D^alpha``: differentiate ``alpha[i]`` times in variable ``i``."""
        p = self
        for i, times in enumerate(alpha):
            for _ in range(times):
                p = p.diff(i)
        return p

    def evaluate(self, point):
        """Exact value at ``point`` (a sequence of rationals)."""
        if len(point) != self.nvars:
            raise UsageError(f"point has {len(point)} coordinates, expected {self.nvars}")
        point = [Fraction(x) for x in point]
        total = Fraction(0)
        for m, c in self._terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= x ** e
            total += v
        return total

    def substitute(self, images):
        """Compose: replace variable ``i`` by the polynomial ``images[i]``."""
        if len(images) != self.nvars:
            raise UsageError("substitution needs one image per variable")
        target = images[0].nvars if images else self.nvars
        result = Poly.zero(target)
        powers = [{0: Poly.one(target)} for _ in images]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e - 1) * images[i]
            return cache[e]

        for m, c in self._terms.items():
            term = Poly.const(target, c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def extend(self, nvars):
        """Embed into a ring with ``nvars >= self.nvars`` variables (new ones appended)."""
        pad = (0,) * (nvars - self.nvars)
        return Poly._raw(nvars, {m + pad: c for m, c in self._terms.items()})

    # normalization

    def content(self):
        """Rational content: gcd of numerators over lcm of denominators (positive)."""
        if not self._terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self._terms.values():
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
        return Fraction(num, den)

    def primitive(self):
        """Associate with coprime integer coefficients and positive leading coefficient."""
        if not self._terms:
            return self
        c = self.content()
        if self.leading_coeff() < 0:
            c = -c
        return self.scale(1 / c)

    def monic(self):
        return self.scale(1 / self.leading_coeff())

    def coefficients_in(self, index):
        """Split by powers of variable ``index``: ``{e: coefficient poly free of that variable}``."""
        parts = {}
        for m, c in self._terms.items():
            e = m[index]
            mm = m[:index] + (0,) + m[index + 1:]
            parts.setdefault(e, {})[mm] = c
        return {e: Poly._raw(self.nvars, t) for e, t in parts.items()}

    # rendering

    def to_str(self, names=None):
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        if not self._terms:
            return "0"
        pieces = []
        for m, c in self.terms():
            factors = []
            for name, e in zip(names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Poly({self.nvars}, {self.to_str()!r})"
