"""Polynomially parametrized projective varieties: model, text format, sampling, catalog."""

from __future__ import annotations

import functools
import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction

from ._parser import parse_text
from .errors import GenericityFailure, UsageError, ValidationError
from .exactmath import QMatrix, rank

MAX_ATTEMPTS = 64
DOUBLE_EVERY = 8


@dataclass(frozen=True)
class ParamVariety:
    """Image of ``u -> (coords[0](u) : ... : coords[N](u))`` for ``u`` in affine k-space."""

    name: str
    varnames: tuple
    coords: tuple

    def __post_init__(self):
        if not self.varnames:
            raise ValidationError("a variety needs at least one parameter")
        if len(self.coords) < 2:
            raise ValidationError("a projective map needs at least two coordinates")
        if any(p.nvars != self.k for p in self.coords):
            raise ValidationError("every coordinate must be a polynomial in the declared variables")
        if all(p.is_zero for p in self.coords):
            raise ValidationError("all coordinates are identically zero")
        if self.k > self.N:
            raise ValidationError(f"k = {self.k} parameters exceed ambient dimension N = {self.N}")

    @property
    def k(self):
        return len(self.varnames)

    @property
    def N(self):
        return len(self.coords) - 1

    @property
    def normalization_index(self):
        """Coordinate used to dehomogenize: the first one not identically zero."""
        return next(i for i, p in enumerate(self.coords) if not p.is_zero)

    def evaluate(self, point):
        return tuple(p.evaluate(point) for p in self.coords)


@dataclass(frozen=True)
class SamplePoint:
    coords: tuple
    seed_used: int
    attempts: int


def derive_seed(seed, index):
    """Seed of the ``index``-th sample in the stream started by ``seed``."""
    if index == 0:
        return seed
    digest = hashlib.sha256(f"osculate:{seed}:{index}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def first_order_rank(V, point):
    rows = [V.evaluate(point)]
    for i in range(V.k):
        rows.append(tuple(p.diff(i).evaluate(point) for p in V.coords))
    return rank(QMatrix(rows, V.N + 1))


def is_generic(V, point):
    if V.coords[V.normalization_index].evaluate(point) == 0:
        return False
    return first_order_rank(V, point) == V.k + 1


def sample_point(V, seed, bound=10):
    """Seeded random rational point passing the genericity predicate.

    Coordinates are ``a/b`` with ``|a| <= bound`` and ``1 <= b <= bound``; the
    bound doubles after every 8 rejections.
    """
    if bound < 2:
        raise UsageError("sampling bound must be at least 2")
    rng = random.Random(seed)
    b = bound
    for attempt in range(1, MAX_ATTEMPTS + 1):
        point = tuple(Fraction(rng.randint(-b, b), rng.randint(1, b)) for _ in range(V.k))
        if is_generic(V, point):
            return SamplePoint(point, seed, attempt)
        if attempt % DOUBLE_EVERY == 0:
            b *= 2
    raise GenericityFailure(f"{V.name}: no generic point found in {MAX_ATTEMPTS} attempts")


def validate(V):
    """Load-time check that the map is generically immersive."""
    try:
        sample_point(V, 0, 10)
    except GenericityFailure:
        raise ValidationError(
            f"{V.name}: degenerate parametrization (order-1 jet rank < k+1 = {V.k + 1} at every sampled point)"
        ) from None
    return V


def parse_variety(text, default_name="variety"):
    name, varnames, coords = parse_text(text)
    return validate(ParamVariety(name or default_name, varnames, coords))


def render_variety(V):
    """Text in the input grammar; ``parse_variety(render_variety(V)) == V``."""
    lines = [f"name={V.name};", f"vars={','.join(V.varnames)};"]
    lines += [f"P{i}={p.to_str(V.varnames)};" for i, p in enumerate(V.coords)]
    return "\n".join(lines) + "\n"


_CATALOG_TEXT = {
    # (x^2y : xy^2 : x^2z : xz^2 : y^2z : yz^2) on the chart x = 1
    "togliatti": "vars=u,v; P0=u; P1=u^2; P2=v; P3=v^2; P4=u^2*v; P5=u*v^2",
    "veronese": "vars=u,v; P0=1; P1=u; P2=v; P3=u^2; P4=u*v; P5=v^2",
    "rnc2": "vars=u; P0=1; P1=u; P2=u^2",
    "rnc3": "vars=u; P0=1; P1=u; P2=u^2; P3=u^3",
    "rnc4": "vars=u; P0=1; P1=u; P2=u^2; P3=u^3; P4=u^4",
    "cone_rnc3": "vars=u,v; P0=1; P1=u; P2=u^2; P3=u^3; P4=v",
    # A(u) + v A'(u) with A the moment curve of degree 4
    "tangent_dev_rnc4": "vars=u,v; P0=1; P1=u+v; P2=u^2+2*u*v; P3=u^3+3*u^2*v; P4=u^4+4*u^3*v",
}


@functools.lru_cache(maxsize=None)
def catalog():
    """Built-in test varieties, in a fixed order."""
    return tuple(parse_variety(text, default_name=name) for name, text in _CATALOG_TEXT.items())


def catalog_entry(name):
    for V in catalog():
        if V.name == name:
            return V
    raise UsageError(f"no catalog variety named {name!r}; known: {', '.join(v.name for v in catalog())}")


def rnc(d):
    """Rational normal curve of degree ``d`` (moment curve in P^d)."""
    terms = "; ".join(f"P{i}=u^{i}" for i in range(d + 1))
    return parse_variety(f"name=rnc{d}; vars=u; {terms}")
