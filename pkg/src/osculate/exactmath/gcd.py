"""Multivariate polynomial gcd over Q by recursive primitive remainder sequences.

The polynomial is viewed as univariate in its highest-index variable with
coefficients in the remaining variables; contents are taken recursively.
Results are normalized by :meth:`Poly.primitive`, so ``gcd`` is canonical.
"""

from __future__ import annotations

from .poly import Poly


def _lead_in(p: Poly, x: int) -> Poly:
    parts = p.coefficients_in(x)
    return parts[max(parts)]


def pseudo_remainder(a: Poly, b: Poly, x: int) -> Poly:
    """Sparse pseudo-remainder of ``a`` by ``b`` as polynomials in variable ``x``."""
    n = b.degree_in(x)
    lc_b = _lead_in(b, x)
    xvar = Poly.var(a.nvars, x)
    r = a
    while not r.is_zero and r.degree_in(x) >= n:
        d = r.degree_in(x)
        r = r * lc_b - _lead_in(r, x) * xvar ** (d - n) * b
    return r


def content_in(p: Poly, x: int) -> Poly:
    """Gcd of the coefficients of ``p`` seen as a polynomial in variable ``x``."""
    return gcd_many(p.coefficients_in(x).values(), nvars=p.nvars)


def primitive_in(p: Poly, x: int) -> Poly:
    return p.exact_div(content_in(p, x))


def gcd(a: Poly, b: Poly) -> Poly:
    """Canonical gcd: integer-primitive with positive leading coefficient (``0`` iff both zero)."""
    if a.nvars != b.nvars:
        raise ValueError("gcd of polynomials in different rings")
    if a.is_zero:
        return b.primitive()
    if b.is_zero:
        return a.primitive()
    if a.is_constant or b.is_constant:
        return Poly.one(a.nvars)
    live = [i for i in range(a.nvars) if a.degree_in(i) > 0 or b.degree_in(i) > 0]
    x = live[-1]
    if a.degree_in(x) == 0:
        return gcd(a, content_in(b, x))
    if b.degree_in(x) == 0:
        return gcd(content_in(a, x), b)
    ca, cb = content_in(a, x), content_in(b, x)
    c = gcd(ca, cb)
    p, q = a.exact_div(ca), b.exact_div(cb)
    if p.degree_in(x) < q.degree_in(x):
        p, q = q, p
    while not q.is_zero:
        r = pseudo_remainder(p, q, x)
        p, q = q, (primitive_in(r, x) if not r.is_zero else r)
    return (c * primitive_in(p, x)).primitive()


def gcd_many(polys, nvars=None) -> Poly:
    result = None
    for p in polys:
        result = p.primitive() if result is None else gcd(result, p)
        if result.is_constant and not result.is_zero:
            break
    if result is None:
        return Poly.zero(nvars)
    return result
