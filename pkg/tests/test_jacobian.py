from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given

from weylstar.errors import JacobianNotOne, NotAlphaMorphism
from weylstar.geometry import lower_degree, lower_leading_term
from weylstar.jacobian import (
    JacFamilyParams,
    apply_poly_alpha,
    apply_poly_beta,
    beta_conjugate,
    build_jac_family,
    compose_poly,
    is_alpha_morphism,
    jac_bracket,
    jac_family_inverse,
    jc2_classify,
    jc2_invert,
)
from weylstar.poly import PolyElement

from .strategies import jac_family_params, poly_elements, scalars

X, Y = PolyElement.generators()
F = Fraction
SX, SY = sympy.symbols("X Y")


def to_sympy(p):
    return sum((sympy.Rational(c.numerator, c.denominator) * SX**i * SY**j for (i, j), c in p.terms.items()), sympy.Integer(0))


class TestBracket:
    def test_examples(self):
        assert jac_bracket(X, Y) == 1
        p = X**3 * Y + Y**2
        assert jac_bracket(p, p).is_zero()

    def test_lowest_order_parts(self):
        hp = X**3 - 2 * X + 1
        hq = 3 * X**2 + 5
        assert jac_bracket(hp, Y * hq) == hp.diff_x() * hq

    @given(poly_elements(3, 4), poly_elements(3, 4))
    def test_matches_sympy(self, p, q):
        expected = sympy.expand(
            sympy.diff(to_sympy(p), SX) * sympy.diff(to_sympy(q), SY)
            - sympy.diff(to_sympy(p), SY) * sympy.diff(to_sympy(q), SX)
        )
        assert sympy.expand(to_sympy(jac_bracket(p, q)) - expected) == 0

    @given(poly_elements(3, 4), poly_elements(3, 4), poly_elements(3, 4), scalars)
    def test_bilinear_antisymmetric_leibniz(self, p, q, r, c):
        assert jac_bracket(p + q.scale(c), r) == jac_bracket(p, r) + jac_bracket(q, r).scale(c)
        assert jac_bracket(p, q) == -jac_bracket(q, p)
        assert jac_bracket(p * q, r) == p * jac_bracket(q, r) + jac_bracket(p, r) * q
        assert jac_bracket(r, p * q) == p * jac_bracket(r, q) + jac_bracket(r, p) * q

    @given(poly_elements(), poly_elements())
    def test_lower_order_inequality(self, p, q):
        b = jac_bracket(p, q)
        assume(not b.is_zero())
        d = (0, 1)
        assert lower_degree(d, b) >= lower_degree(d, p) + lower_degree(d, q) - 1


class TestInvolutions:
    def test_examples(self):
        assert apply_poly_alpha(X**2 * Y) == X * Y**2
        assert apply_poly_beta(X * Y**3) == -X * Y**3
        assert apply_poly_beta(X**2 + Y**2) == X**2 + Y**2

    @given(poly_elements(), poly_elements())
    def test_homomorphisms(self, p, q):
        assert apply_poly_alpha(p * q) == apply_poly_alpha(p) * apply_poly_alpha(q)
        assert apply_poly_beta(p * q) == apply_poly_beta(p) * apply_poly_beta(q)
        assert apply_poly_alpha(apply_poly_alpha(p)) == p


class TestAlphaMorphism:
    def test_examples(self):
        assert is_alpha_morphism(X, Y)
        a, b, c = F(5, 4), F(3, 4), 7
        t = (X - Y) ** 2 * c
        assert is_alpha_morphism(X * a + Y * b + t, Y * a + X * b + t)
        assert not is_alpha_morphism(X + 1, Y)

    @given(jac_family_params())
    def test_family_members(self, p):
        fx, fy = build_jac_family(p)
        assert jac_bracket(fx, fy) == 1
        assert is_alpha_morphism(fx, fy)


class TestClassify:
    def test_identity(self):
        assert jc2_classify(X, Y) == JacFamilyParams(1, 0, ())

    def test_quadratic_example(self):
        t = 2 * (X - Y) ** 2
        p = jc2_classify(F(5, 4) * X + F(3, 4) * Y + t, F(5, 4) * Y + F(3, 4) * X + t)
        assert p.to_json() == {"a": "5/4", "b": "3/4", "c": ["0", "2"]}

    def test_not_alpha_morphism_before_jacobian(self):
        assert jac_bracket(X + Y, Y) == 1
        with pytest.raises(NotAlphaMorphism):
            jc2_classify(X + Y, Y)

    def test_jacobian_not_one(self):
        with pytest.raises(JacobianNotOne) as info:
            jc2_classify(2 * X, 2 * Y)
        assert info.value.residual == 4

    def test_invert_examples(self):
        assert jc2_invert(X, Y) == (X, Y)
        assert jc2_invert(-X, -Y) == (-X, -Y)
        f = build_jac_family((F(5, 4), F(3, 4), [0, 2]))
        g = jc2_invert(*f)
        assert compose_poly(f, g) == (X, Y) == compose_poly(g, f)

    @given(jac_family_params())
    def test_roundtrip(self, p):
        f = build_jac_family(p)
        assert jc2_classify(*f) == p
        g = jc2_invert(*f)
        assert g == jac_family_inverse(p)
        assert compose_poly(f, g) == (X, Y) == compose_poly(g, f)

    @given(jac_family_params())
    def test_conjugated_lowest_order_parts(self, p):
        P, Q = beta_conjugate(*build_jac_family(p))
        lam = p.a - p.b
        assert Q == Y.scale(lam)
        assert lower_leading_term((0, 1), Q) == Y.scale(lam)
        c0 = p.c[0] if p.c else 0
        # the constant term of the series sits on the same Y-order as X/lam
        assert lower_leading_term((0, 1), P) == X / lam + c0
        g = P - X / lam
        assert all(i == 0 and j % 2 == 0 for i, j in g.terms)

    def test_invalid_params(self):
        from weylstar.errors import InvalidParams

        with pytest.raises(InvalidParams):
            JacFamilyParams(2, 1)
