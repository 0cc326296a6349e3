"""Higher Gauss maps through Plücker coordinates, fiber dimensions, osculating varieties.

The s-th Gauss map sends a point to its s-th osculating space.  With the
adapted frame frozen at a generic sample, the space at ``u`` is spanned by
the selected symbolic jet rows, and its Plücker coordinates are the maximal
minors of those rows, polynomials in the parameters.  Fiber dimension is
``k`` minus the rank of the Jacobian of an affine chart of that map.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .conegeom import cone_space_dim, vertex
from .errors import GenericityFailure, ResourceError, UsageError
from .exactmath import Poly, QMatrix, RatFunc, rank
from .fundforms import fundamental_form
from .jets import (DEFAULT_BOUND, DEFAULT_SAMPLES, adapted_frame, osculating_dims, probe,
                   symbolic_jet)
from .variety import derive_seed

MAX_PLUCKER_COORDS = 10000


def maximal_minors(rows, ncols):
    """All ``n x n`` minors of an ``n x ncols`` polynomial matrix, keyed by column subset.

    Built by Laplace expansion along the last row, reusing the minors of the
    first ``i`` rows, so no division is needed.
    """
    if not rows:
        return {}
    nvars = rows[0][0].nvars
    level = {(): Poly.one(nvars)}
    for i, row in enumerate(rows):
        nxt = {}
        for S in combinations(range(ncols), i + 1):
            total = Poly.zero(nvars)
            for pos, c in enumerate(S):
                entry = row[c]
                sub = level[S[:pos] + S[pos + 1:]]
                if entry.is_zero or sub.is_zero:
                    continue
                term = entry * sub
                total = total + term if (i + pos) % 2 == 0 else total - term
            nxt[S] = total
        level = nxt
    return level


@dataclass(frozen=True)
class PluckerChart:
    """Plücker coordinates of the s-th Gauss map as functions of the parameters.

    ``coords[i]`` is the maximal minor on column subset ``subsets[i]`` (subsets
    in lexicographic order); ``pivot`` indexes a coordinate nonzero at the sample.
    """

    s: int
    selected_rows: tuple
    subsets: tuple
    coords: tuple
    pivot: int

    def nonzero_at(self, point):
        return [i for i, c in enumerate(self.coords) if c.evaluate(point) != 0]


def plucker_chart(V, frame, s, p, max_coords=MAX_PLUCKER_COORDS):
    if s < 1 or s > frame.order:
        raise UsageError(f"order s = {s} outside the frame (order {frame.order})")
    alphas = tuple(frame.rows_up_to(s))
    n = len(alphas)
    if n > V.N:
        raise UsageError(f"d_s + 1 = {n} exceeds N = {V.N}: the Gauss map is constant")
    count = comb(V.N + 1, n)
    if count > max_coords:
        raise ResourceError(f"{count} Plücker coordinates exceed the guard {max_coords}")
    rows = [symbolic_jet(V, a) for a in alphas]
    minors = maximal_minors(rows, V.N + 1)
    subsets = tuple(sorted(minors))
    coords = tuple(RatFunc(minors[S]) for S in subsets)
    point = p.coords if hasattr(p, "coords") else tuple(p)
    nonzero = [i for i, c in enumerate(coords) if c.evaluate(point) != 0]
    if not nonzero:
        raise GenericityFailure("every Plücker coordinate vanishes at the sample point")
    return PluckerChart(s, alphas, subsets, coords, nonzero[0])


def chart_jacobian_rank(chart, point, pivot=None):
    """Rank at ``point`` of the Jacobian of ``(c_J / c_pivot)_{J != pivot}``."""
    point = point.coords if hasattr(point, "coords") else tuple(point)
    k = chart.coords[0].nvars
    values = [c.num.evaluate(point) for c in chart.coords]
    if pivot is None:
        pivot = next((i for i, v in enumerate(values) if v), None)
        if pivot is None:
            raise GenericityFailure("every Plücker coordinate vanishes at the point")
    cp = values[pivot]
    if cp == 0:
        raise UsageError("pivot coordinate vanishes at the point")
    grads = [[c.num.diff(i).evaluate(point) for i in range(k)] for c in chart.coords]
    rows = []
    for J, (cj, gj) in enumerate(zip(values, grads)):
        if J == pivot:
            continue
        rows.append([(gj[i] * cp - cj * grads[pivot][i]) / (cp * cp) for i in range(k)])
    return rank(QMatrix(rows, k))


def _context(V, s, seed, samples, bound):
    pr = probe(V, s + 1, seed, samples, bound)
    profile = osculating_dims(V, s + 1, seed, samples, bound)
    return pr, profile


def plucker_fiber_dim(V, s, seed=0, samples=DEFAULT_SAMPLES, bound=DEFAULT_BOUND,
                      max_coords=MAX_PLUCKER_COORDS):
    """Fiber dimension from the rank of the Plücker chart, maximized over the samples."""
    pr = probe(V, s, seed, samples, bound)
    frame = adapted_frame(V, pr.working, s)
    chart = plucker_chart(V, frame, s, pr.working, max_coords)
    best = 0
    for pt in pr.points:
        if not chart.nonzero_at(pt.coords):
            continue
        best = max(best, chart_jacobian_rank(chart, pt))
    return V.k - best


def gauss_fiber_dim(V, s, seed=0, samples=DEFAULT_SAMPLES, bound=DEFAULT_BOUND):
    """Dimension of the general fiber of the s-th Gauss map.

    Returns ``k`` directly (constant map) when ``d_s = N`` or ``|I^{s+1}|`` is empty.
    """
    if s < 1:
        raise UsageError("Gauss map order must be at least 1")
    pr, profile = _context(V, s, seed, samples, bound)
    if profile.d(s) == V.N:
        return V.k
    if fundamental_form(V, pr.working, s + 1).is_empty:
        return V.k
    return plucker_fiber_dim(V, s, seed, samples, bound)


@dataclass(frozen=True)
class GaussAnalysis:
    s: int
    fiber_dim: int
    image_dim: int
    vertex_dim: int
    theorem_pass: bool
    route: str  # "plucker" or "constant"
    bound_rhs: int  # d_s + C(k - m + s, s + 1)
    bound_pass: bool
    bound_equality: bool
    complete_cone_system: bool
    tan_dim: int = None


def osculating_variety_dim(V, s, seed=0, samples=DEFAULT_SAMPLES, bound=DEFAULT_BOUND):
    """Dimension of the union of the s-th osculating spaces.

    ``Phi(u, lam) = sum_j lam_j B_j(u)`` over the adapted rows ``B_j``; with
    homogeneous ``lam`` the Jacobian rank of ``Phi`` is the dimension of the
    affine cone, one more than the projective dimension.
    """
    pr = probe(V, s, seed, samples, bound)
    d_s = pr.generic_ranks[s - 1] - 1
    if d_s > V.N:
        raise UsageError("d_s exceeds N")
    frame = adapted_frame(V, pr.working, s)
    alphas = frame.rows_up_to(s)
    best = 0
    for idx, pt in enumerate(pr.points):
        rng = random.Random(derive_seed(seed, 10_000 + idx))
        lam = [Fraction(rng.randint(1, bound), rng.randint(1, bound)) * rng.choice((1, -1)) for _ in alphas]
        rows = [tuple(q.evaluate(pt.coords) for q in symbolic_jet(V, a)) for a in alphas]
        for i in range(V.k):
            row = [Fraction(0)] * (V.N + 1)
            for lj, a in zip(lam, alphas):
                shifted = a[:i] + (a[i] + 1,) + a[i + 1:]
                for c, q in enumerate(symbolic_jet(V, shifted)):
                    row[c] += lj * q.evaluate(pt.coords)
            rows.append(tuple(row))
        best = max(best, rank(QMatrix(rows, V.N + 1)))
    return best - 1


def verify_cone_theorem(V, s, seed=0, samples=DEFAULT_SAMPLES, bound=DEFAULT_BOUND, with_tan=True,
                        max_coords=MAX_PLUCKER_COORDS):
    """Compare the Plücker-route fiber dimension with the vertex of ``|I^{s+1}|``.

    Also evaluates ``d_{s+1} <= d_s + C(k - m + s, s + 1)`` and whether equality
    coincides with ``|I^{s+1}|`` being the complete system of cones over the vertex.
    """
    if s < 1:
        raise UsageError("Gauss map order must be at least 1")
    pr, profile = _context(V, s, seed, samples, bound)
    k = V.k
    form = fundamental_form(V, pr.working, s + 1)
    vx = vertex(form)
    if profile.d(s) == V.N:
        m, route = k, "constant"
    else:
        m, route = plucker_fiber_dim(V, s, seed, samples, bound, max_coords), "plucker"
    rhs = profile.d(s) + comb(k - m + s, s + 1)
    bound_pass = profile.d(s + 1) <= rhs
    equality = profile.d(s + 1) == rhs
    complete = (form.projective_dim + 1) == cone_space_dim(vx, s + 1, k)
    tan = None
    if with_tan and profile.d(s) < V.N:
        tan = osculating_variety_dim(V, s, seed, samples, bound)
    return GaussAnalysis(
        s=s, fiber_dim=m, image_dim=k - m, vertex_dim=vx.dim, theorem_pass=(m == vx.dim),
        route=route, bound_rhs=rhs, bound_pass=bound_pass, bound_equality=equality,
        complete_cone_system=complete, tan_dim=tan,
    )
