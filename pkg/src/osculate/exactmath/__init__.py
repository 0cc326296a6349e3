"""Exact rationals, sparse polynomials, rational functions and linear algebra."""

from fractions import Fraction as Rat

from .gcd import gcd, gcd_many
from .linalg import (QMatrix, nullspace, poly_nullspace, poly_rref, rank, row_basis, rref,
                     span_contains)
from .poly import Poly, grlex_key
from .ratfunc import RatFunc


def poly_diff(p, var_index):
    return p.diff(var_index)


def poly_eval(p, point):
    return p.evaluate(point)


__all__ = [
    "Rat", "Poly", "RatFunc", "QMatrix", "grlex_key", "gcd", "gcd_many",
    "poly_diff", "poly_eval", "rref", "rank", "row_basis", "nullspace", "span_contains",
    "poly_rref", "poly_nullspace",
]
