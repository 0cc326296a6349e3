from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from osculate.conegeom import (cone_space_dim, directional_derivative, perfect_power, powers_of_common_linear,
                               vertex)
from osculate.errors import UsageError
from osculate.exactmath import Poly, QMatrix, rank, span_contains
from osculate.fundforms import LinSys
from strategies import cones, forms, nonzero_rationals, small_ints

w1, w2 = Poly.var(2, 0), Poly.var(2, 1)
W = [Poly.var(3, i) for i in range(3)]


def system(*fs):
    return LinSys.from_forms(fs)


def test_vertex_examples():
    assert vertex(LinSys.complete(2, 2)).dim == 0
    vx = vertex(system(w1 ** 3))
    assert vx.dim == 1 and [tuple(r) for r in vx.basis.rows] == [(0, 1)]
    vx = vertex(system(W[0] ** 2, W[0] * W[1], W[1] ** 2))
    assert vx.dim == 1 and [tuple(r) for r in vx.basis.rows] == [(0, 0, 1)]
    assert vertex(LinSys.from_forms([], nvars=2, degree=2)).dim == 2


def test_cone_space_dim():
    # cones over the w2 axis: only w1^3
    assert cone_space_dim(vertex(system(w1 ** 3)), 3, 2) == 1
    assert cone_space_dim(vertex(LinSys.complete(2, 2)), 3, 2) == 4


def test_perfect_power_examples():
    lin, t = perfect_power(w1 ** 3 + 6 * w1 ** 2 * w2 + 12 * w1 * w2 ** 2 + 8 * w2 ** 3)
    assert lin == (1, 2) and t == 3
    assert perfect_power(w1 ** 2 + w2 ** 2) is None
    assert perfect_power(w1 ** 2 * w2) is None
    with pytest.raises(UsageError):
        perfect_power(Poly.zero(2))
    with pytest.raises(UsageError):
        perfect_power(w1 ** 2 + w2)


def test_common_linear_examples():
    assert powers_of_common_linear(system(w1 ** 2), system(w1 ** 3)) == (1, 0)
    assert powers_of_common_linear(system(w1 ** 2), system(w2 ** 3)) is None
    assert powers_of_common_linear(system((w1 + w2) ** 2), system((w1 + w2) ** 3)) == (1, 1)
    with pytest.raises(UsageError):
        powers_of_common_linear(system(w1 ** 2), system(w1 ** 4))
    with pytest.raises(UsageError):
        powers_of_common_linear(LinSys.complete(2, 2), system(w1 ** 3))


@settings(max_examples=150, deadline=None)
@given(cones(), st.builds(Fraction, st.integers(-5, 5), st.integers(1, 3)))
def test_vertex_substitution_identity(data, lam):
    fs, min_dim = data
    fs = [f for f in fs if not f.is_zero]
    assume(fs)
    k = fs[0].nvars
    vx = vertex(LinSys.from_forms(fs))
    assert vx.dim >= min_dim
    for vec in vx.basis.rows:
        shifted = [Poly.var(k, j) + Poly.const(k, lam * vec[j]) for j in range(k)]
        for f in fs:
            assert f.substitute(shifted) == f
            assert directional_derivative(f, vec).is_zero


@settings(max_examples=150, deadline=None)
@given(cones(), st.lists(st.lists(small_ints, min_size=3, max_size=3), min_size=3, max_size=3))
def test_vertex_basis_invariance(data, A):
    fs, _ = data
    fs = [f for f in fs if not f.is_zero]
    assume(fs and rank(QMatrix(A, 3)) == 3)
    # G(x) = F(Ax) has vertex A^{-1} U
    images = [sum((Poly.var(3, j).scale(c) for j, c in enumerate(row)), Poly.zero(3)) for row in A]
    vf = vertex(LinSys.from_forms(fs))
    vg = vertex(LinSys.from_forms([f.substitute(images) for f in fs]))
    assert vf.dim == vg.dim
    mapped = QMatrix([QMatrix(A, 3).times_vector(row) for row in vg.basis.rows], 3)
    assert span_contains(vf.basis, mapped)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 3).flatmap(lambda k: st.tuples(
    st.lists(small_ints, min_size=k, max_size=k).filter(any), st.integers(1, 5), nonzero_rationals)))
def test_perfect_power_round_trip(data):
    coeffs, t, c = data
    k = len(coeffs)
    ell = sum((Poly.var(k, j).scale(a) for j, a in enumerate(coeffs)), Poly.zero(k))
    lin, tt = perfect_power((ell ** t).scale(c))
    lead = next(a for a in coeffs if a)
    assert tt == t and lin == tuple(Fraction(a, lead) for a in coeffs)


@settings(max_examples=100, deadline=None)
@given(st.lists(forms(nvars=3, degree=2), min_size=2, max_size=4))
def test_vertex_shrinks_as_system_grows(fs):
    small = vertex(LinSys.from_forms(fs[:1]))
    big = vertex(LinSys.from_forms(fs))
    assert big.dim <= small.dim
    assert span_contains(small.basis, big.basis)
