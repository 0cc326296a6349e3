from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from osculate.errors import UsageError
from osculate.exactmath import (Poly, QMatrix, RatFunc, gcd, nullspace, poly_nullspace, rank, rref,
                                span_contains)
from strategies import low_rank_matrices, matrices, polys, rationals

x, y = Poly.var(2, 0), Poly.var(2, 1)
u, v = x, y
X, Y = sympy.symbols("x1 x2")


def to_sympy(p):
    return sum((sympy.Rational(c.numerator, c.denominator) * X ** m[0] * Y ** m[1] for m, c in p.terms()),
               sympy.Integer(0))


def from_sympy(expr):
    poly = sympy.Poly(sympy.expand(expr), X, Y)
    return Poly(2, {m: Fraction(int(c.p), int(c.q)) for m, c in poly.terms()})


class TestPolyBasics:
    def test_diff_examples(self):
        assert (x ** 2 * y).diff(0) == 2 * x * y
        assert (x ** 2).diff(1) == 0
        assert (u ** 2 * v + u).diff(0) == 2 * u * v + 1

    def test_eval_examples(self):
        assert (x ** 2 * y).evaluate((2, 3)) == 12
        assert Poly.zero(2).evaluate((Fraction(5, 7), 9)) == 0
        assert (u ** 2 + v ** 2).evaluate((Fraction(1, 2), Fraction(1, 3))) == Fraction(13, 36)

    def test_degrees_and_homogeneity(self):
        p = x ** 3 + 2 * x * y ** 2
        assert p.total_degree() == 3 and p.is_homogeneous()
        assert not (p + 1).is_homogeneous()
        assert Poly.zero(2).total_degree() == -1

    def test_grlex_leading_term(self):
        mono, c = (x * y ** 2 - 4 * x ** 3 + y).leading_term()
        assert mono == (3, 0) and c == -4

    def test_rendering(self):
        p = Fraction(3, 4) * u ** 2 - v
        assert p.to_str(["u", "v"]) == "3/4*u^2 - v"

    def test_exact_div(self):
        assert ((x + y) * (x - 2 * y)).exact_div(x - 2 * y) == x + y
        with pytest.raises(ArithmeticError):
            (x ** 2 + 1).exact_div(x + 1)
        with pytest.raises(ZeroDivisionError):
            x.exact_div(Poly.zero(2))

    def test_bad_inputs(self):
        with pytest.raises(UsageError):
            x.diff(2)
        with pytest.raises(UsageError):
            x.evaluate((1,))

    def test_primitive_is_integral_with_positive_lead(self):
        p = (Fraction(-2, 3) * x ** 2 + Fraction(4, 9) * y).primitive()
        assert p == 3 * x ** 2 - 2 * y


@settings(max_examples=150, deadline=None)
@given(polys(), polys(), st.integers(0, 1))
def test_product_rule(f, g, i):
    assert (f * g).diff(i) == f.diff(i) * g + f * g.diff(i)


@settings(max_examples=150, deadline=None)
@given(polys(max_deg=4))
def test_mixed_partials_commute(f):
    assert f.diff(0).diff(1) == f.diff(1).diff(0)


@settings(max_examples=100, deadline=None)
@given(polys(), polys())
def test_ring_ops_match_sympy(f, g):
    assert from_sympy(to_sympy(f) * to_sympy(g) - to_sympy(g)) == f * g - g


@settings(max_examples=100, deadline=None)
@given(polys(), rationals, rationals)
def test_evaluation_is_a_homomorphism(f, a, b):
    g = f * f + f
    assert g.evaluate((a, b)) == f.evaluate((a, b)) ** 2 + f.evaluate((a, b))


@settings(max_examples=100, deadline=None)
@given(polys(max_terms=3, max_deg=2), polys(max_terms=3, max_deg=2), polys(max_terms=3, max_deg=2))
def test_gcd_against_sympy(a, b, c):
    if (a * c).is_zero or (b * c).is_zero:
        return
    ours = gcd(a * c, b * c)
    ref = from_sympy(sympy.gcd(to_sympy(a * c), to_sympy(b * c)))
    assert ours == ref.primitive()


@settings(max_examples=100, deadline=None)
@given(polys(max_terms=3, max_deg=2), polys(max_terms=3, max_deg=2), polys(max_terms=2, max_deg=2))
def test_ratfunc_canonical(a, b, c):
    if b.is_zero or c.is_zero:
        return
    r1 = RatFunc(a * c, b * c)
    r2 = RatFunc(a, b)
    assert r1 == r2 and hash(r1) == hash(r2)
    assert r1.den.leading_coeff() == 1
    assert gcd(r1.num, r1.den) == 1 or r1.num.is_zero


def test_ratfunc_arithmetic():
    r = RatFunc(x, y) + RatFunc(y, x)
    assert r == RatFunc(x ** 2 + y ** 2, x * y)
    assert RatFunc(x, y).diff(1) == RatFunc(-x, y ** 2)
    assert (RatFunc(x, y) * RatFunc(y, x)) == 1
    with pytest.raises(ZeroDivisionError):
        RatFunc(x, y).evaluate((1, 0))


class TestLinalgExamples:
    def test_rref(self):
        _, piv, r = rref(QMatrix.identity(3))
        assert r == 3 and list(piv) == [0, 1, 2]
        _, piv, r = rref(QMatrix([[1, 2], [2, 4]]))
        assert r == 1 and list(piv) == [0]
        _, piv, r = rref(QMatrix([[0, 0], [0, 0]]))
        assert r == 0 and list(piv) == []

    def test_nullspace(self):
        assert [tuple(b) for b in nullspace(QMatrix([[1, 1]]))] == [(1, -1)]
        assert list(nullspace(QMatrix.identity(2))) == []
        assert len(nullspace(QMatrix.zeros(2, 3))) == 3

    def test_span_contains(self):
        assert span_contains(QMatrix([[1, 0], [0, 1]]), QMatrix([[3, 5]]))
        assert not span_contains(QMatrix([[1, 0]]), QMatrix([[0, 1]]))
        assert span_contains(QMatrix([[1, 0]]), QMatrix([], 2))

    def test_poly_nullspace(self):
        # rows (1, u) and (u, u^2) are dependent over Q(u)
        rows = [[Poly.one(1), Poly.var(1, 0)], [Poly.var(1, 0), Poly.var(1, 0) ** 2]]
        kernel = poly_nullspace(rows, 2)
        assert len(kernel) == 1
        a, b = kernel[0]
        assert a + b * Poly.var(1, 0) == 0


def _sym(m):
    return sympy.Matrix(m.nrows, m.shape[1], [sympy.Rational(e.numerator, e.denominator)
                                                for row in m.rows for e in map(Fraction, row)])


@settings(max_examples=150, deadline=None)
@given(low_rank_matrices())
def test_rank_matches_sympy(m):
    assert rank(m) == _sym(m).rank()


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_of_transpose(m):
    assert rank(m) == rank(m.transpose())


@settings(max_examples=150, deadline=None)
@given(low_rank_matrices())
def test_rref_idempotent(m):
    reduced, piv, r = rref(m)
    again, piv2, r2 = rref(reduced)
    assert again == reduced and list(piv) == list(piv2) and r == r2


@settings(max_examples=150, deadline=None)
@given(low_rank_matrices())
def test_nullspace_is_kernel(m):
    basis = nullspace(m)
    assert len(basis) == m.shape[1] - rank(m)
    for vec in basis:
        assert all(e == 0 for e in m.times_vector(vec))
