"""Cone vertices of linear systems of forms and perfect-power detection."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UsageError
from .exactmath import Poly, QMatrix, nullspace, rank
from .fundforms import LinSys, form_monomials


@dataclass(frozen=True)
class VertexSpace:
    """Linear subspace U of the tangent space along which every form is constant.

    Rows of ``basis`` are vectors of length ``nvars`` (the RREF-free kernel
    basis returned by :func:`~osculate.exactmath.nullspace`).
    """

    basis: QMatrix

    @property
    def dim(self):
        return self.basis.nrows


def directional_derivative(form, v):
    """``D_v F = sum_j v_j dF/dw_j``."""
    out = Poly.zero(form.nvars)
    for j, vj in enumerate(v):
        if vj:
            out = out + form.diff(j).scale(vj)
    return out


def vertex(S):
    """Vertex of the system: ``{v : D_v F == 0 for all F in S}``.

    Each coefficient of ``D_v F`` is linear in ``v``, so U is the kernel of
    the matrix whose rows are (form, monomial) pairs and whose column ``j``
    holds the coefficient of that monomial in ``dF/dw_j``.
    """
    k = S.nvars
    if S.is_empty or S.degree == 0:
        return VertexSpace(QMatrix.identity(k))
    monos = form_monomials(k, S.degree - 1)
    rows = []
    for f in S.forms():
        partials = [f.diff(j) for j in range(k)]
        rows.extend([d.coeff(m) for d in partials] for m in monos)
    return VertexSpace(QMatrix(nullspace(QMatrix(rows, k)), k))


def cone_space_dim(vertex_space, degree, nvars):
    """Dimension of the vector space of degree-``degree`` forms that are cones over ``vertex_space``."""
    monos = form_monomials(nvars, degree)
    if not vertex_space.basis.nrows:
        return len(monos)
    lower = form_monomials(nvars, degree - 1)
    index = {m: i for i, m in enumerate(lower)}
    # linear map F -> (D_v F)_{v in basis}, columns indexed by the monomials of F
    rows = []
    for v in vertex_space.basis.rows:
        block = [[0] * len(monos) for _ in lower]
        for col, m in enumerate(monos):
            for j, vj in enumerate(v):
                if vj and m[j]:
                    mm = m[:j] + (m[j] - 1,) + m[j + 1:]
                    block[index[mm]][col] += vj * m[j]
        rows.extend(block)
    return len(monos) - rank(QMatrix(rows, len(monos)))


def _normalize_linear(coeffs):
    lead = next(c for c in coeffs if c)
    return tuple(c / lead for c in coeffs)


def perfect_power(form):
    """``(l, t)`` with ``form == c * l**t`` and ``l`` normalized (first nonzero coefficient 1), else ``None``.

    A degree-t form is a power of a linear form iff its partial derivatives
    span a one-dimensional space whose generator is itself such a power.
    """
    if form.is_zero:
        raise UsageError("the zero form is not a power of a linear form")
    if not form.is_homogeneous():
        raise UsageError("perfect_power expects a homogeneous form")
    t = form.total_degree()
    k = form.nvars
    if t == 0:
        return None
    g = form
    while g.total_degree() > 1:
        partials = LinSys.from_forms([d for d in (g.diff(j) for j in range(k)) if not d.is_zero],
                                     nvars=k, degree=g.total_degree() - 1)
        if partials.projective_dim != 0:
            return None
        g = partials.forms()[0]
    linear = _normalize_linear([g.coeff(tuple(1 if i == j else 0 for i in range(k))) for j in range(k)])
    ell = Poly(k, {tuple(1 if i == j else 0 for i in range(k)): c for j, c in enumerate(linear)})
    power = ell ** t
    lm, lc = form.leading_term()
    if form != power.scale(lc / power.coeff(lm)):
        return None
    return linear, t


def powers_of_common_linear(A, B):
    """The linear form ``l`` when ``A = {c l^(s+1)}`` and ``B = {c' l^(s+2)}``, else ``None``."""
    if A.projective_dim != 0 or B.projective_dim != 0:
        raise UsageError("both systems must consist of a single form")
    if B.degree != A.degree + 1:
        raise UsageError("the second system must have degree one higher than the first")
    pa = perfect_power(A.forms()[0])
    pb = perfect_power(B.forms()[0])
    if pa is None or pb is None or pa[0] != pb[0]:
        return None
    return pa[0]


def linear_form_str(coeffs, labels=None):
    labels = labels or [f"w{i + 1}" for i in range(len(coeffs))]
    k = len(coeffs)
    p = Poly(k, {tuple(1 if i == j else 0 for i in range(k)): c for j, c in enumerate(coeffs)})
    return p.to_str(labels)
