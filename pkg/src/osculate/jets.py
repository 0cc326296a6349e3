"""Jet matrices, osculating dimensions, adapted frames and Laplace relations.

Rows of a jet matrix are the partial derivatives ``D^alpha A_0`` of the
parametrization for all multi-indices ``|alpha| <= t``, ordered by total
degree and then lexicographically descending, so for two parameters the
order is ``A, A_u, A_v, A_uu, A_uv, A_vv, ...``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, lcm

from .errors import GenericityFailure, ResourceError, UsageError
from .exactmath import Poly, QMatrix, gcd_many, poly_nullspace, rank, rref
from .variety import SamplePoint, derive_seed, sample_point

MAX_JET_ROWS = 256
DEFAULT_SAMPLES = 3
DEFAULT_BOUND = 10
EXTRA_SAMPLES = 32


def multi_indices(k, t):
    """Exponent tuples of total degree ``t`` in ``k`` variables, lex descending."""
    if k == 1:
        return [(t,)]
    out = []
    for first in range(t, -1, -1):
        out.extend((first,) + rest for rest in multi_indices(k - 1, t - first))
    return out


def jet_indices(k, t):
    """All multi-indices of degree ``<= t`` in jet-row order."""
    return [alpha for s in range(t + 1) for alpha in multi_indices(k, s)]


def _check_size(k, t, max_rows):
    n = comb(k + t, k)
    if n > max_rows:
        raise ResourceError(f"order-{t} jet matrix would have {n} rows (guard {max_rows})")


@functools.lru_cache(maxsize=None)
def symbolic_jet(V, alpha):
    """``D^alpha`` of every coordinate, as polynomials."""
    if not any(alpha):
        return tuple(V.coords)
    i = next(j for j, a in enumerate(alpha) if a)
    lower = alpha[:i] + (alpha[i] - 1,) + alpha[i + 1:]
    return tuple(p.diff(i) for p in symbolic_jet(V, lower))


def _coords_of(p):
    return p.coords if isinstance(p, SamplePoint) else tuple(p)


def jet_rows_at(V, point, alphas):
    point = _coords_of(point)
    return [tuple(q.evaluate(point) for q in symbolic_jet(V, a)) for a in alphas]


@dataclass(frozen=True)
class JetMatrix:
    order: int
    rows: QMatrix
    row_index: dict

    @property
    def rank(self):
        return rank(self.rows)


def jet_matrix(V, p, t, max_rows=MAX_JET_ROWS):
    if t < 1:
        raise UsageError("jet order must be at least 1")
    _check_size(V.k, t, max_rows)
    alphas = jet_indices(V.k, t)
    rows = QMatrix(jet_rows_at(V, p, alphas), V.N + 1)
    return JetMatrix(t, rows, {a: i for i, a in enumerate(alphas)})


def _ranks_by_order(V, point, tmax):
    """Rank of the order-t jet matrix for t = 1..tmax at one point."""
    ranks = []
    for t in range(1, tmax + 1):
        rows = QMatrix(jet_rows_at(V, point, jet_indices(V.k, t)), V.N + 1)
        ranks.append(rank(rows))
    return tuple(ranks)


@dataclass(frozen=True)
class Probe:
    """Seeded samples with their per-order jet ranks.

    ``generic_ranks[t-1]`` is the maximum rank of the order-t jet matrix over
    all drawn samples; ``working`` is the first sample attaining every maximum.
    """

    tmax: int
    points: tuple
    ranks: tuple
    generic_ranks: tuple
    working: SamplePoint


@functools.lru_cache(maxsize=None)
def probe(V, tmax, seed, samples=DEFAULT_SAMPLES, bound=DEFAULT_BOUND, max_rows=MAX_JET_ROWS):
    if samples < 1:
        raise UsageError("at least one sample is required")
    _check_size(V.k, tmax, max_rows)
    points, ranks = [], []
    for i in range(samples + EXTRA_SAMPLES):
        p = sample_point(V, derive_seed(seed, i), bound)
        points.append(p)
        ranks.append(_ranks_by_order(V, p, tmax))
        if i + 1 < samples:
            continue
        generic = tuple(max(r[j] for r in ranks) for j in range(tmax))
        for pt, r in zip(points, ranks):
            if r == generic:
                return Probe(tmax, tuple(points), tuple(ranks), generic, pt)
    raise GenericityFailure(f"{V.name}: no sample attains the generic jet ranks simultaneously")


@dataclass(frozen=True)
class DimProfile:
    """Osculating dimensions ``d_1..d_tmax`` with expected values and the Δ_t."""

    dims: tuple
    expected: tuple
    deltas: tuple  # Δ_2, ..., Δ_tmax

    def d(self, t):
        return self.dims[t - 1]

    def delta(self, t):
        return self.deltas[t - 2]

    @property
    def tmax(self):
        return len(self.dims)


def expected_dims(k, N, tmax):
    return tuple(min(N, comb(k + t, k) - 1) for t in range(1, tmax + 1))


def osculating_dims(V, tmax, seed=0, samples=DEFAULT_SAMPLES, bound=DEFAULT_BOUND):
    if tmax < 1:
        raise UsageError("tmax must be at least 1")
    pr = probe(V, tmax, seed, samples, bound)
    dims = tuple(r - 1 for r in pr.generic_ranks)
    deltas = tuple(dims[t] - dims[t - 1] - 1 for t in range(1, tmax))
    return DimProfile(dims, expected_dims(V.k, V.N, tmax), deltas)


@dataclass(frozen=True)
class AdaptedFrame:
    """Jet rows chosen order by order so that the first ``d_s + 1`` span the s-th osculating space.

    ``selected[s]`` lists the multi-indices added at order ``s`` (``s = 0``
    is the point itself); ``reduced[s]`` is the RREF basis of the cumulative
    span, i.e. the change of basis from the selected rows to reduced form.
    """

    order: int
    selected: tuple
    reduced: tuple

    def rows_up_to(self, s):
        return [a for chunk in self.selected[: s + 1] for a in chunk]

    def cumulative_counts(self):
        counts, total = [], 0
        for chunk in self.selected:
            total += len(chunk)
            counts.append(total)
        return tuple(counts)


def adapted_frame(V, p, t, max_rows=MAX_JET_ROWS):
    if t < 1:
        raise UsageError("frame order must be at least 1")
    _check_size(V.k, t, max_rows)
    basis = []
    current = 0
    selected, reduced = [], []
    for s in range(t + 1):
        chunk = []
        for alpha, row in zip(multi_indices(V.k, s), jet_rows_at(V, p, multi_indices(V.k, s))):
            r = rank(QMatrix(basis + [row], V.N + 1))
            if r > current:
                basis.append(row)
                chunk.append(alpha)
                current = r
        selected.append(tuple(chunk))
        reduced_s, _, r = rref(QMatrix(basis, V.N + 1))
        reduced.append(QMatrix(reduced_s.rows[:r], V.N + 1))
    return AdaptedFrame(t, tuple(selected), tuple(reduced))


@dataclass(frozen=True)
class LaplaceRelation:
    """``sum(coefficients[i] * D^alphas[i] A_0) == 0`` identically in the parameters."""

    alphas: tuple
    coefficients: tuple

    def residual(self, V):
        total = [Poly.zero(V.k) for _ in range(V.N + 1)]
        for alpha, c in zip(self.alphas, self.coefficients):
            if c.is_zero:
                continue
            for j, q in enumerate(symbolic_jet(V, alpha)):
                total[j] = total[j] + c * q
        return tuple(total)


def normalize_relation(vector):
    """Primitive coprime polynomial vector, first nonzero entry with positive leading coefficient."""
    nvars = vector[0].nvars
    g = gcd_many([c for c in vector if not c.is_zero], nvars=nvars)
    vec = [c.exact_div(g) for c in vector]
    num, den = 0, 1
    for c in vec:
        for _, x in c.terms():
            num = gcd(num, x.numerator)
            den = lcm(den, x.denominator)
    factor = Fraction(den, num)
    if next(c for c in vec if not c.is_zero).leading_coeff() < 0:
        factor = -factor
    return tuple(c.scale(factor) for c in vec)


def laplace_relations(V, t, max_rows=MAX_JET_ROWS):
    """Basis of linear relations with polynomial coefficients among the jets of order ``<= t``.

    Computed over the function field Q(u) by fraction-free elimination of the
    symbolic jet matrix, so the result is exact, not interpolated.
    """
    if t < 2:
        raise UsageError("Laplace relations need order t >= 2")
    _check_size(V.k, t, max_rows)
    alphas = jet_indices(V.k, t)
    rows = [symbolic_jet(V, a) for a in alphas]
    columns = [[rows[i][j] for i in range(len(alphas))] for j in range(V.N + 1)]
    kernel = poly_nullspace(columns, len(alphas))
    return [LaplaceRelation(tuple(alphas), normalize_relation(v)) for v in kernel]
