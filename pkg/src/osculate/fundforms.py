"""Higher fundamental forms as linear systems of forms on the tangent space."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod

from .errors import UsageError
from .exactmath import Poly, QMatrix, rref, span_contains
from .jets import jet_indices, jet_rows_at, multi_indices


def form_monomials(k, t):
    """Monomial basis of degree-``t`` forms in ``k`` variables, graded-lex descending."""
    return multi_indices(k, t)


def default_labels(k):
    return tuple(f"w{i + 1}" for i in range(k))


@dataclass(frozen=True)
class LinSys:
    """Linear system of degree-``degree`` forms in ``nvars`` variables.

    ``basis`` holds coefficient vectors over :func:`form_monomials`, in RREF
    with no zero rows, so equal systems have equal bases.
    """

    degree: int
    nvars: int
    basis: QMatrix

    @classmethod
    def span(cls, degree, nvars, rows):
        width = len(form_monomials(nvars, degree))
        reduced, _, r = rref(QMatrix(rows, width)) if rows else (None, None, 0)
        return cls(degree, nvars, QMatrix(reduced.rows[:r] if r else [], width))

    @classmethod
    def from_forms(cls, forms, nvars=None, degree=None):
        forms = list(forms)
        if forms:
            nvars = forms[0].nvars
            degree = forms[0].total_degree()
        monos = form_monomials(nvars, degree)
        rows = []
        for f in forms:
            if not f.is_zero and (not f.is_homogeneous() or f.total_degree() != degree):
                raise UsageError("all forms of a linear system must be homogeneous of the same degree")
            rows.append([f.coeff(m) for m in monos])
        return cls.span(degree, nvars, rows)

    @classmethod
    def complete(cls, degree, nvars):
        n = len(form_monomials(nvars, degree))
        return cls(degree, nvars, QMatrix.identity(n))

    @property
    def is_empty(self):
        return self.basis.nrows == 0

    @property
    def projective_dim(self):
        return self.basis.nrows - 1

    def forms(self):
        monos = form_monomials(self.nvars, self.degree)
        return [Poly(self.nvars, dict(zip(monos, row))) for row in self.basis.rows]

    def to_strings(self, labels=None):
        labels = labels or default_labels(self.nvars)
        return [f.primitive().to_str(labels) for f in self.forms()]


def projective_dim(S):
    return S.projective_dim


def fundamental_form(V, p, t):
    """The t-th fundamental form at ``p``.

    Each order-``t`` jet row is reduced modulo the order-``(t-1)`` jet span;
    its coordinates in the non-pivot columns of that span's RREF give the
    normal-space components.  Component ``l`` contributes the form
    ``sum_{|alpha|=t} t!/alpha! * residue_alpha[l] * w^alpha``.
    """
    if t < 2:
        raise UsageError("fundamental forms are defined for t >= 2")
    lower = QMatrix(jet_rows_at(V, p, jet_indices(V.k, t - 1)), V.N + 1)
    reduced, pivots, r = rref(lower)
    span = reduced.rows[:r]
    complement = [c for c in range(V.N + 1) if c not in set(pivots)]
    alphas = multi_indices(V.k, t)
    residues = []
    for row in jet_rows_at(V, p, alphas):
        res = list(row)
        for basis_row, pc in zip(span, pivots):
            f = res[pc]
            if f:
                res = [a - f * b for a, b in zip(res, basis_row)]
        residues.append(res)
    weights = [Fraction(factorial(t), prod(factorial(a) for a in alpha)) for alpha in alphas]
    rows = [[w * res[col] for w, res in zip(weights, residues)] for col in complement]
    return LinSys.span(t, V.k, rows)


def jacobian_system(S):
    """Span of all first partial derivatives of the forms of ``S``."""
    if S.degree < 2:
        raise UsageError("the Jacobian system needs forms of degree >= 2")
    derivs = [f.diff(j) for f in S.forms() for j in range(S.nvars)]
    return LinSys.from_forms([d for d in derivs if not d.is_zero], nvars=S.nvars, degree=S.degree - 1)


def contains(A, B):
    """True iff every form of ``B`` belongs to ``A``."""
    if B.is_empty:
        return True
    if A.degree != B.degree or A.nvars != B.nvars:
        raise UsageError("containment needs systems of equal degree and variable count")
    return span_contains(A.basis, B.basis)


def check_dim_recursion(profile, forms):
    """``d_t == d_{t-1} + dim|I^t| + 1`` for every ``2 <= t <= tmax``."""
    for t in range(2, profile.tmax + 1):
        if profile.d(t) != profile.d(t - 1) + projective_dim(forms[t]) + 1:
            return False
    return True
