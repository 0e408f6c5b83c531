"""Endomorphisms and involutions of A_1(Q).

An endomorphism is fixed by the images of the generators, held as a
:class:`GenImages` pair.  The exchange involution ``alpha`` (x <-> y) and its
conjugate ``beta = phi^-1 . alpha . phi`` (x -> x, y -> -y) are
antihomomorphisms and are applied monomial by monomial in closed form.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from ._sparse import substitute, to_scalar
from .errors import InvalidParams
from .weyl import WeylElement, commutator

x, y = WeylElement.generators()


class GenImages(NamedTuple):
    """Images ``(f(x), f(y))`` of the generators; no validity implied."""

    fx: WeylElement
    fy: WeylElement


def as_images(g):
    return g if isinstance(g, GenImages) else GenImages(*g)


def apply_endo(g, w):
    """Apply the homomorphism ``x -> g.fx, y -> g.fy`` to ``w``."""
    g = as_images(g)
    return substitute(g.fx, g.fy, w)


def compose(outer, inner):
    """Images of ``outer . inner`` (apply ``inner`` first)."""
    inner = as_images(inner)
    return GenImages(apply_endo(outer, inner.fx), apply_endo(outer, inner.fy))


IDENTITY = GenImages(x, y)


def apply_alpha(w):
    # alpha(x^i y^j) = alpha(y)^j alpha(x)^i = x^j y^i, already normal
    return WeylElement({(j, i): c for (i, j), c in w.terms.items()})


def apply_beta(w):
    # beta(x^i y^j) = (-y)^j x^i, which needs reordering
    out = WeylElement.zero()
    for (i, j), c in w.terms.items():
        sign = -1 if j % 2 else 1
        out = out + (WeylElement.monomial(0, j) * WeylElement.monomial(i, 0)).scale(sign * c)
    return out


PHI = GenImages((x + y) / 2, y - x)
PHI_INV = GenImages(x - y / 2, x + y / 2)


def apply_phi(w):
    return apply_endo(PHI, w)


def apply_phi_inv(w):
    return apply_endo(PHI_INV, w)


@dataclass(frozen=True)
class Diagnosis:
    """Exact residuals; a map passes a check iff its residual is zero."""

    endomorphism_residual: WeylElement
    alpha_residual_x: WeylElement
    alpha_residual_y: WeylElement

    @property
    def is_endomorphism(self):
        return self.endomorphism_residual.is_zero()

    @property
    def is_alpha_equivariant(self):
        return self.alpha_residual_x.is_zero() and self.alpha_residual_y.is_zero()


def diagnose(g):
    """Residuals ``[fy, fx] - 1``, ``alpha(fx) - fy`` and ``alpha(fy) - fx``."""
    g = as_images(g)
    return Diagnosis(
        commutator(g.fy, g.fx) - 1,
        apply_alpha(g.fx) - g.fy,
        apply_alpha(g.fy) - g.fx,
    )


def is_endomorphism(g):
    g = as_images(g)
    return commutator(g.fy, g.fx) == 1


def is_alpha_equivariant(g):
    g = as_images(g)
    return g.fy == apply_alpha(g.fx) and g.fx == apply_alpha(g.fy)


def _trim(cs):
    cs = [to_scalar(c) for c in cs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class FamilyParams:
    """Parameters ``(a, b, c_0..c_n)`` with ``a**2 - b**2 == 1``.

    ``c`` is stored without trailing zeros; the empty tuple means no
    ``(x - y)^(2j)`` terms at all.
    """

    a: Fraction
    b: Fraction
    c: tuple = ()

    def __post_init__(self):
        a, b = to_scalar(self.a), to_scalar(self.b)
        if a * a - b * b != 1:
            raise InvalidParams(f"a^2 - b^2 = {a * a - b * b}, expected 1")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", _trim(self.c))

    @classmethod
    def from_lambda(cls, lam, alphas=()):
        """Family with ``a = -(4 lam^2 + 1)/(4 lam)``, ``b = (4 lam^2 - 1)/(4 lam)``."""
        lam = to_scalar(lam)
        if lam == 0:
            raise InvalidParams("lambda must be nonzero")
        return cls((-4 * lam * lam - 1) / (4 * lam), (4 * lam * lam - 1) / (4 * lam), alphas)

    @property
    def lam(self):
        # a + b = -1/(2 lam)
        return -1 / (2 * (self.a + self.b))


def _even_series(c, base):
    """``sum_j c_j * base^(2j)``."""
    sq = base * base
    out = WeylElement.zero()
    term = WeylElement.one()
    for j, cj in enumerate(c):
        if j:
            term = term * sq
        if cj:
            out = out + term.scale(cj)
    return out


def build_family(p):
    if not isinstance(p, FamilyParams):
        p = FamilyParams(*p)
    s = _even_series(p.c, x - y)
    return GenImages(x.scale(p.a) + y.scale(p.b) + s, y.scale(p.a) + x.scale(p.b) + s)


def family_inverse(p):
    if not isinstance(p, FamilyParams):
        p = FamilyParams(*p)
    a, b = p.a, p.b
    s = _even_series(p.c, (x - y) / (a - b)).scale(b - a)
    return GenImages(x.scale(a) - y.scale(b) + s, y.scale(a) - x.scale(b) + s)
