"""The commutative analogue on Q[X, Y] with the Jacobian bracket.

A polynomial map commuting with ``alpha: X <-> Y`` and of Jacobian 1 has the
form ``f(X) = aX + bY + T, f(Y) = aY + bX + T`` where ``a^2 - b^2 = 1`` and
``T = sum_j c_j (X - Y)^(2j)``.  :func:`jc2_classify` recovers ``(a, b, c)``
by matching that shape directly.
"""

from dataclasses import dataclass
from fractions import Fraction

from ._sparse import format_scalar, to_scalar
from .errors import InvalidParams, JacobianNotOne, NotAlphaMorphism, NotInFamily
from .poly import PolyElement

X, Y = PolyElement.generators()


def jac_bracket(p, q):
    """``dp/dX * dq/dY - dp/dY * dq/dX``."""
    return p.diff_x() * q.diff_y() - p.diff_y() * q.diff_x()


def apply_poly_alpha(p):
    return PolyElement({(j, i): c for (i, j), c in p.terms.items()})


def apply_poly_beta(p):
    return PolyElement({(i, j): -c if j % 2 else c for (i, j), c in p.terms.items()})


def apply_poly_map(fx, fy, p):
    """Apply the algebra map ``X -> fx, Y -> fy`` to ``p``."""
    return p.substitute(fx, fy)


def compose_poly(outer, inner):
    """Images of ``outer . inner``; both are ``(fX, fY)`` pairs."""
    return tuple(apply_poly_map(*outer, h) for h in inner)


POLY_PHI = ((X + Y) / 2, Y - X)
POLY_PHI_INV = (X - Y / 2, X + Y / 2)


def is_alpha_morphism(fx, fy):
    return fy == apply_poly_alpha(fx) and fx == apply_poly_alpha(fy)


@dataclass(frozen=True)
class JacFamilyParams:
    """``(a, b, c_0..c_n)`` with ``a^2 - b^2 = 1``; trailing zeros of ``c`` dropped."""

    a: Fraction
    b: Fraction
    c: tuple = ()

    def __post_init__(self):
        a, b = to_scalar(self.a), to_scalar(self.b)
        if a * a - b * b != 1:
            raise InvalidParams(f"a^2 - b^2 = {a * a - b * b}, expected 1")
        c = [to_scalar(v) for v in self.c]
        while c and not c[-1]:
            c.pop()
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", tuple(c))

    def to_json(self):
        return {
            "a": format_scalar(self.a),
            "b": format_scalar(self.b),
            "c": [format_scalar(v) for v in self.c],
        }


def _even_series(c, base):
    sq = base * base
    out = PolyElement.zero()
    term = PolyElement.one()
    for j, cj in enumerate(c):
        if j:
            term = term * sq
        out = out + term.scale(cj)
    return out


def build_jac_family(p):
    if not isinstance(p, JacFamilyParams):
        p = JacFamilyParams(*p)
    t = _even_series(p.c, X - Y)
    return X.scale(p.a) + Y.scale(p.b) + t, Y.scale(p.a) + X.scale(p.b) + t


def jac_family_inverse(p):
    if not isinstance(p, JacFamilyParams):
        p = JacFamilyParams(*p)
    a, b = p.a, p.b
    t = _even_series(p.c, (X - Y) / (a - b)).scale(b - a)
    return X.scale(a) - Y.scale(b) + t, Y.scale(a) - X.scale(b) + t


def beta_conjugate(fx, fy):
    """Images ``(P, Q)`` of ``phi^-1 . f . phi``.

    For a classified map ``Q = lam*Y`` and ``P = X/lam + g(Y)`` with
    ``lam = a - b`` and ``g`` even.
    """
    inner = compose_poly((fx, fy), POLY_PHI)
    return compose_poly(POLY_PHI_INV, inner)


def jc2_classify(fx, fy):
    if not is_alpha_morphism(fx, fy):
        res = apply_poly_alpha(fx) - fy
        raise NotAlphaMorphism(f"alpha(fX) - fY = {res}", res)
    jac = jac_bracket(fx, fy)
    if jac != 1:
        raise JacobianNotOne(f"Jac(fX, fY) = {jac}", jac)

    d = fx - fy
    delta = d.coefficient(1, 0)
    if not delta or d != (X - Y).scale(delta):
        raise NotInFamily(f"fX - fY = {d} is not a nonzero multiple of X - Y")
    # a - b = delta and (a - b)(a + b) = 1
    s_ab = 1 / delta
    a, b = (s_ab + delta) / 2, (s_ab - delta) / 2
    t = (fx + fy - (X + Y).scale(s_ab)) / 2

    # t must be a polynomial in u = X - Y; its values on Y = 0 give t(u)
    series = PolyElement({(i, 0): c for (i, j), c in t.terms.items() if j == 0})
    coeffs = series.univariate_coefficients(0)
    if any(coeffs[k] for k in range(1, len(coeffs), 2)):
        raise NotInFamily(f"{t} has odd powers of X - Y")
    params = JacFamilyParams(a, b, coeffs[0::2])
    if build_jac_family(params) != (fx, fy):
        raise NotInFamily(f"rebuilt family {params} differs from input")
    return params


def jc2_invert(fx, fy):
    return jac_family_inverse(jc2_classify(fx, fy))
