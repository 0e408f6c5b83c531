"""Supports, weighted degrees and leading faces.

Every function accepts a :class:`~weylstar.weyl.WeylElement` or a
:class:`~weylstar.poly.PolyElement`.  Weyl elements are read through the
symbol map ``x^i y^j -> X^i Y^j``, so only the stored support matters and the
noncommutative product never enters.  Leading terms come back in the type
they went in as.

A direction ``(rho, sigma)`` weighs the exponent pair ``(i, j)`` as
``rho*i + sigma*j``.  The "lower" variants take minima instead of maxima.
"""

from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

from .errors import InvalidDirection, ZeroElement, ZeroPoint
from .poly import PolyElement
from .weyl import WeylElement


class LatticePoint(NamedTuple):
    i: int
    j: int


@dataclass(frozen=True)
class Direction:
    """Coprime weight pair with ``rho + sigma >= 0``."""

    rho: int
    sigma: int

    def __post_init__(self):
        if gcd(self.rho, self.sigma) != 1:
            raise InvalidDirection(f"gcd({self.rho}, {self.sigma}) != 1")
        if self.rho + self.sigma < 0:
            raise InvalidDirection(f"rho + sigma < 0 for ({self.rho}, {self.sigma})")

    @property
    def is_strict(self):
        """True when ``rho + sigma > 0``."""
        return self.rho + self.sigma > 0

    def weight(self, point):
        i, j = point
        return self.rho * i + self.sigma * j

    def __iter__(self):
        return iter((self.rho, self.sigma))


def as_direction(d):
    if isinstance(d, Direction):
        return d
    rho, sigma = d
    return Direction(int(rho), int(sigma))


def psi(a):
    """Relabel a Weyl element as the commutative polynomial with the same terms."""
    return PolyElement(a.terms)


def _nonzero_terms(p):
    if not isinstance(p, (WeylElement, PolyElement)):
        raise TypeError(f"expected WeylElement or PolyElement, got {type(p).__name__}")
    if p.is_zero():
        raise ZeroElement("operation undefined on the zero element")
    return p.terms


def support(p):
    return {LatticePoint(i, j) for (i, j) in _nonzero_terms(p)}


def degree(d, p):
    d = as_direction(d)
    return max(d.weight(k) for k in _nonzero_terms(p))


def lower_degree(d, p):
    d = as_direction(d)
    return min(d.weight(k) for k in _nonzero_terms(p))


def _face(d, p, pick):
    d = as_direction(d)
    terms = _nonzero_terms(p)
    target = pick(d.weight(k) for k in terms)
    return type(p)({k: c for k, c in terms.items() if d.weight(k) == target})


def leading_term(d, p):
    """Sum of the terms of ``p`` of maximal ``d``-weight."""
    return _face(d, p, max)


def lower_leading_term(d, p):
    """Sum of the terms of ``p`` of minimal ``d``-weight."""
    return _face(d, p, min)


def w_point(p):
    v = degree((1, -1), p)
    face = leading_term((1, -1), p)
    i0 = max(i for i, _ in face.terms)
    return LatticePoint(i0, i0 - v)


def w_bar_point(p):
    v = degree((-1, 1), p)
    face = leading_term((-1, 1), p)
    j0 = max(j for _, j in face.terms)
    return LatticePoint(j0 - v, j0)


def start_point(d, p):
    d = as_direction(d)
    if (d.rho, d.sigma) == (1, -1):
        raise InvalidDirection("start point is undefined for direction (1, -1)")
    return w_point(leading_term(d, p))


def end_point(d, p):
    d = as_direction(d)
    if (d.rho, d.sigma) == (-1, 1):
        raise InvalidDirection("end point is undefined for direction (-1, 1)")
    return w_bar_point(leading_term(d, p))


def aligned(a, b):
    """True iff ``a == gamma * b`` for some rational ``gamma > 0``."""
    a = LatticePoint(*a)
    b = LatticePoint(*b)
    if a == (0, 0) or b == (0, 0):
        raise ZeroPoint("alignment is undefined for the origin")
    if a.i * b.j - a.j * b.i != 0:
        return False
    return a.i * b.i + a.j * b.j > 0
