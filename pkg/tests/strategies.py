"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

from hypothesis import assume
from hypothesis import strategies as st

from osculate.exactmath import Poly, QMatrix, rank

small_ints = st.integers(-6, 6)
rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))
nonzero_rationals = rationals.filter(bool)


def monomials(nvars, max_deg=3):
    return st.tuples(*[st.integers(0, max_deg)] * nvars)


@st.composite
def polys(draw, nvars=2, max_terms=5, max_deg=3):
    terms = draw(st.dictionaries(monomials(nvars, max_deg), rationals, max_size=max_terms))
    return Poly(nvars, terms)


@st.composite
def forms(draw, nvars=2, degree=3, max_terms=4):
    """Homogeneous nonzero forms of a fixed degree."""
    from osculate.fundforms import form_monomials

    monos = form_monomials(nvars, degree)
    chosen = draw(st.lists(st.sampled_from(monos), min_size=1, max_size=max_terms, unique=True))
    coeffs = draw(st.lists(nonzero_rationals, min_size=len(chosen), max_size=len(chosen)))
    return Poly(nvars, dict(zip(chosen, coeffs)))


@st.composite
def matrices(draw, max_rows=5, max_cols=5, entries=small_ints):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r))
    return QMatrix(rows, c)


@st.composite
def low_rank_matrices(draw, max_rows=6, max_cols=6):
    """Products of thin factors, so rank deficiency is common."""
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    inner = draw(st.integers(1, min(r, c)))
    a = draw(st.lists(st.lists(small_ints, min_size=inner, max_size=inner), min_size=r, max_size=r))
    b = draw(st.lists(st.lists(small_ints, min_size=c, max_size=c), min_size=inner, max_size=inner))
    return QMatrix(a, inner) @ QMatrix(b, c)


@st.composite
def cones(draw, k=3):
    """A system of forms pulled back along a linear map to fewer variables, plus that map."""
    m = draw(st.integers(1, k - 1))  # number of linear forms; the vertex has dimension >= k - m
    lin = draw(st.lists(st.lists(small_ints, min_size=k, max_size=k), min_size=m, max_size=m))
    assume(rank(QMatrix(lin, k)) == m)
    degree = draw(st.integers(2, 3))
    gs = draw(st.lists(forms(nvars=m, degree=degree), min_size=1, max_size=3))
    images = [sum((Poly.var(k, j).scale(c) for j, c in enumerate(row)), Poly.zero(k)) for row in lin]
    return [g.substitute(images) for g in gs], k - m
