"""Exact linear algebra over Q and over the rational-function field Q(u).

Both paths share one fraction-free Gauss-Jordan core (the Gauss-Jordan
variant of Bareiss elimination): every intermediate entry is a minor of the
input, every division is exact, and on exit all pivots carry the same value.
Rational matrices are first scaled row-wise to integers.  Division by the
common pivot happens once, at the end.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from ..errors import UsageError
from .poly import Poly
from .ratfunc import RatFunc


class QMatrix:
    """Dense immutable matrix of :class:`~fractions.Fraction` entries.

    ``ncols`` is stored explicitly so that matrices with no rows still carry
    their width.
    """

    __slots__ = ("rows", "ncols")

    def __init__(self, rows, ncols=None):
        rows = tuple(tuple(Fraction(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise UsageError("an empty QMatrix needs an explicit column count")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise UsageError("QMatrix rows must all have the same length")
        self.rows = rows
        self.ncols = ncols

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def __eq__(self, other):
        return isinstance(other, QMatrix) and self.ncols == other.ncols and self.rows == other.rows

    def __hash__(self):
        return hash((self.rows, self.ncols))

    def transpose(self):
        return QMatrix([[r[j] for r in self.rows] for j in range(self.ncols)], self.nrows)

    def stack(self, other):
        if other.ncols != self.ncols:
            raise UsageError(f"column mismatch: {self.ncols} vs {other.ncols}")
        return QMatrix(self.rows + other.rows, self.ncols)

    def times_vector(self, v):
        if len(v) != self.ncols:
            raise UsageError("vector length does not match column count")
        return tuple(sum((a * b for a, b in zip(r, v)), Fraction(0)) for r in self.rows)

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise UsageError("inner dimensions do not match")
        cols = other.transpose().rows
        return QMatrix([[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols] for r in self.rows],
                       other.ncols)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)
        return f"QMatrix([{body}], ncols={self.ncols})"


def _as_qmatrix(m):
    return m if isinstance(m, QMatrix) else QMatrix(m)


def _int_div(a, b):
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError("non-exact division in fraction-free elimination")
    return q


def _poly_div(a, b):
    if isinstance(b, int) and b == 1:
        return a
    return a.exact_div(b)


def fraction_free_gauss_jordan(rows, ncols, div, one=1):
    """Fraction-free Gauss-Jordan elimination over an integral domain.

    ``rows`` is a list of lists of ring elements, ``div`` performs exact
    division.  Returns ``(rows, pivot_cols, pivot_value)``; the first
    ``len(pivot_cols)`` rows are in echelon form with every pivot equal to
    ``pivot_value`` and zeros elsewhere in pivot columns.
    """
    rows = [list(r) for r in rows]
    nrows = len(rows)
    prev = one
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        prow = rows[r]
        for i in range(nrows):
            if i == r:
                continue
            a = rows[i][c]
            row = rows[i]
            if a:
                rows[i] = [div(p * x - a * y, prev) for x, y in zip(row, prow)]
            else:
                rows[i] = [div(p * x, prev) if x else x for x in row]
        prev = p
        pivots.append(c)
        r += 1
    return rows, pivots, prev


def rref(m):
    """Reduced row-echelon form of a rational matrix.

    Returns ``(reduced, pivot_cols, rank)`` where ``reduced`` has the same
    shape as ``m`` with zero rows at the bottom.
    """
    m = _as_qmatrix(m)
    int_rows = []
    for row in m.rows:
        scale = lcm(*(x.denominator for x in row)) if row else 1
        int_rows.append([int(x * scale) for x in row])
    rows, pivots, p = fraction_free_gauss_jordan(int_rows, m.ncols, _int_div)
    rank = len(pivots)
    out = [[Fraction(x, p) for x in rows[i]] for i in range(rank)]
    out += [[Fraction(0)] * m.ncols for _ in range(m.nrows - rank)]
    return QMatrix(out, m.ncols), pivots, rank


def rank(m):
    return rref(m)[2]


def row_basis(m):
    """Nonzero rows of the RREF of ``m``: the canonical basis of its row span."""
    reduced, _, r = rref(m)
    return QMatrix(reduced.rows[:r], reduced.ncols)


def nullspace(m):
    """Basis of the right kernel, each vector scaled so its first nonzero entry is 1."""
    m = _as_qmatrix(m)
    reduced, pivots, r = rref(m)
    free = [c for c in range(m.ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.ncols
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -reduced.rows[i][f]
        lead = next(x for x in v if x)
        basis.append(tuple(x / lead for x in v))
    return basis


def span_contains(a, b):
    """True iff the row span of ``b`` lies inside the row span of ``a``."""
    a, b = _as_qmatrix(a), _as_qmatrix(b)
    if a.ncols != b.ncols:
        raise UsageError(f"column mismatch: {a.ncols} vs {b.ncols}")
    if b.nrows == 0:
        return True
    return rank(a) == rank(a.stack(b))


# polynomial matrices, i.e. matrices over Q(u) with polynomial entries

def _poly_rows(rows):
    rows = [list(r) for r in rows]
    nvars = next((x.nvars for r in rows for x in r if isinstance(x, Poly)), None)
    if nvars is None:
        raise UsageError("polynomial matrix needs at least one Poly entry")
    return [[x if isinstance(x, Poly) else Poly.const(nvars, x) for x in r] for r in rows], nvars


def poly_rref(rows, ncols):
    """RREF over the function field of a matrix with polynomial entries.

    Returns ``(reduced, pivot_cols, rank)`` with ``reduced`` a list of rows
    of :class:`RatFunc` (nonzero rows only).
    """
    rows, _ = _poly_rows(rows)
    out, pivots, p = fraction_free_gauss_jordan(rows, ncols, _poly_div)
    reduced = [[RatFunc(x, p) for x in out[i]] for i in range(len(pivots))]
    return reduced, pivots, len(pivots)


def poly_nullspace(rows, ncols):
    """Right kernel over Q(u) of a polynomial matrix, as polynomial vectors.

    The vectors are those of the RREF kernel basis multiplied through by the
    common pivot, so they span the same function-field subspace.
    """
    rows, nvars = _poly_rows(rows)
    out, pivots, p = fraction_free_gauss_jordan(rows, ncols, _poly_div)
    if isinstance(p, int):
        p = Poly.const(nvars, p)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [Poly.zero(nvars) for _ in range(ncols)]
        v[f] = p
        for i, pc in enumerate(pivots):
            v[pc] = -out[i][f]
        basis.append(v)
    return basis
