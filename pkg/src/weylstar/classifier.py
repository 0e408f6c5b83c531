"""Classification of alpha-endomorphisms of A_1(Q).

Pipeline: check the map, conjugate by ``phi^-1``, split ``P = phi^-1(f(x))``
into beta-symmetric and beta-antisymmetric parts, read off

    P1 = lam * y,    P0 = -x/(2 lam) + sum_j alpha_j y^(2j),

and convert ``lam`` to the family parameters ``(a, b)``.  Every alpha-
endomorphism lands in the family, so a shape mismatch after the checks pass
is raised as :class:`~weylstar.errors.NotInCanonicalShape`, an assertion.
"""

from dataclasses import dataclass
from fractions import Fraction

from ._sparse import format_scalar, to_scalar
from .errors import (
    HypothesisViolation,
    NotAlphaEquivariant,
    NotEndomorphism,
    NotInCanonicalShape,
)
from .morphisms import (
    FamilyParams,
    apply_beta,
    apply_phi_inv,
    as_images,
    build_family,
    diagnose,
    family_inverse,
)
from .weyl import WeylElement, commutator

HALF = Fraction(1, 2)


def even_odd_split(t):
    """Split a polynomial in the second generator alone into even and odd parts."""
    if any(i for i, _ in t.terms):
        raise ValueError(f"{t} is not a polynomial in {t.gens[1]} alone")
    cls = type(t)
    even = cls({k: c for k, c in t.terms.items() if k[1] % 2 == 0})
    odd = cls({k: c for k, c in t.terms.items() if k[1] % 2 == 1})
    return even, odd


@dataclass(frozen=True)
class SymPair:
    """``p0`` is beta-symmetric, ``p1`` beta-antisymmetric, ``[p0, p1] = 1/2``."""

    p0: WeylElement
    p1: WeylElement

    def residuals(self):
        return {
            "beta(p0) - p0": apply_beta(self.p0) - self.p0,
            "beta(p1) + p1": apply_beta(self.p1) + self.p1,
            "[p0, p1] - 1/2": commutator(self.p0, self.p1) - HALF,
        }


def check_images(g):
    """Raise unless ``g`` is an endomorphism commuting with ``alpha``."""
    d = diagnose(g)
    if not d.is_endomorphism:
        raise NotEndomorphism(
            f"[fy, fx] - 1 = {d.endomorphism_residual}", d.endomorphism_residual
        )
    if not d.is_alpha_equivariant:
        res = d.alpha_residual_x if d.alpha_residual_x else d.alpha_residual_y
        raise NotAlphaEquivariant(f"alpha(fx) - fy = {d.alpha_residual_x}", res)


def decompose(g):
    g = as_images(g)
    check_images(g)
    p = apply_phi_inv(g.fx)
    bp = apply_beta(p)
    pair = SymPair((p + bp) / 2, (p - bp) / 2)
    q = apply_phi_inv(g.fy)
    if q != pair.p0 - pair.p1 or commutator(pair.p0, pair.p1) != HALF:
        raise NotInCanonicalShape(f"beta-split of {g} lost the pair relations")
    return pair


def classify_sym_pair(s):
    """Return ``(lam, alphas)`` for a valid symmetric pair."""
    if s.p0.is_zero() or all(i == 0 for i, _ in s.p0.terms):
        raise HypothesisViolation(
            "p0 lies in Q[y^2], so [p0, p1] cannot be a nonzero constant", s.p0
        )
    for name, res in s.residuals().items():
        if res:
            raise HypothesisViolation(f"{name} = {res}", res)

    p1 = dict(s.p1.terms)
    lam = p1.pop((0, 1), Fraction(0))
    if p1 or not lam:
        raise NotInCanonicalShape(f"p1 = {s.p1} is not a multiple of y")

    rest = s.p0 + WeylElement.monomial(1, 0, 1 / (2 * lam))
    if any(i or j % 2 for i, j in rest.terms):
        raise NotInCanonicalShape(f"p0 + x/(2 lam) = {rest} is not even in y alone")
    top = max((j // 2 for _, j in rest.terms), default=-1)
    alphas = tuple(rest.coefficient(0, 2 * k) for k in range(top + 1))
    return lam, alphas


@dataclass(frozen=True)
class CanonicalForm:
    """Classification result ``(lam, alphas)`` with the derived family parameters."""

    lam: Fraction
    alphas: tuple = ()

    def __post_init__(self):
        lam = to_scalar(self.lam)
        if not lam:
            raise ValueError("lambda must be nonzero")
        alphas = [to_scalar(c) for c in self.alphas]
        while alphas and not alphas[-1]:
            alphas.pop()
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "alphas", tuple(alphas))

    @property
    def a(self):
        return (-4 * self.lam**2 - 1) / (4 * self.lam)

    @property
    def b(self):
        return (4 * self.lam**2 - 1) / (4 * self.lam)

    @property
    def c(self):
        return self.alphas

    @property
    def params(self):
        return FamilyParams(self.a, self.b, self.alphas)

    def to_json(self):
        return {
            "lambda": format_scalar(self.lam),
            "a": format_scalar(self.a),
            "b": format_scalar(self.b),
            "c": [format_scalar(c) for c in self.c],
        }


def classify(g):
    g = as_images(g)
    lam, alphas = classify_sym_pair(decompose(g))
    form = CanonicalForm(lam, alphas)
    if build_family(form.params) != g:
        raise NotInCanonicalShape(f"family rebuilt from {form} differs from {g}")
    return form


def invert(g):
    """Images of the inverse automorphism of an alpha-endomorphism."""
    return family_inverse(classify(g).params)
