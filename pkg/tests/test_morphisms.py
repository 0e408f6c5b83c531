from fractions import Fraction

import pytest
import sympy
from hypothesis import given

from weylstar.errors import InvalidParams
from weylstar.morphisms import (
    IDENTITY,
    FamilyParams,
    GenImages,
    apply_alpha,
    apply_beta,
    apply_endo,
    apply_phi,
    apply_phi_inv,
    build_family,
    compose,
    diagnose,
    family_inverse,
    is_alpha_equivariant,
    is_endomorphism,
)
from weylstar.weyl import WeylElement, commutator

from .strategies import family_params, weyl_elements

x, y = WeylElement.generators()
F = Fraction


class TestApplyEndo:
    def test_translation(self):
        assert apply_endo((x + 1, y), x * y) == x * y + y

    @given(weyl_elements())
    def test_identity(self, w):
        assert apply_endo(IDENTITY, w) == w

    def test_swap_generators(self):
        assert apply_endo((y, x), x) == y

    def test_order_matters(self):
        # x^i y^j -> fx^i fy^j, not fy^j fx^i
        assert apply_endo((-y, x), x * y) == -(y * x)

    @given(weyl_elements(2, 4), weyl_elements(2, 4), family_params(max_n=2))
    def test_preserves_commutators(self, w1, w2, p):
        g = build_family(p)
        assert apply_endo(g, commutator(w1, w2)) == commutator(apply_endo(g, w1), apply_endo(g, w2))


class TestInvolutions:
    def test_alpha_examples(self):
        assert apply_alpha(x) == y
        assert apply_alpha(x**2 * y) == x * y**2
        assert apply_alpha(x * y + 1) == x * y + 1

    def test_beta_examples(self):
        assert apply_beta(y) == -y
        assert apply_beta(x * y) == -x * y - 1
        assert apply_beta(x**2) == x**2

    def test_phi_examples(self):
        assert apply_phi(x) == (x + y) / 2
        assert apply_phi_inv(y) == x + y / 2
        assert apply_phi(apply_phi_inv(x * y)) == x * y

    @given(weyl_elements(), weyl_elements())
    def test_antihomomorphisms(self, a, b):
        assert apply_alpha(a * b) == apply_alpha(b) * apply_alpha(a)
        assert apply_beta(a * b) == apply_beta(b) * apply_beta(a)

    @given(weyl_elements())
    def test_involutive(self, w):
        assert apply_alpha(apply_alpha(w)) == w
        assert apply_beta(apply_beta(w)) == w
        assert apply_phi_inv(apply_phi(w)) == w

    @given(weyl_elements())
    def test_beta_is_conjugate_of_alpha(self, w):
        assert apply_beta(w) == apply_phi_inv(apply_alpha(apply_phi(w)))

    def test_phi_is_an_automorphism(self):
        from weylstar.morphisms import PHI, PHI_INV

        assert is_endomorphism(PHI) and is_endomorphism(PHI_INV)
        assert compose(PHI, PHI_INV) == IDENTITY == compose(PHI_INV, PHI)


class TestChecks:
    def test_endomorphism_examples(self):
        assert is_endomorphism((x + 1, y))
        assert not is_endomorphism((y, x))
        assert is_endomorphism(build_family((F(5, 4), F(3, 4), [2])))

    def test_equivariance_examples(self):
        assert is_alpha_equivariant((-x, -y))
        assert not is_alpha_equivariant((x + 1, y))
        assert is_alpha_equivariant(build_family((F(5, 4), F(3, 4), [2])))

    def test_diagnose_residuals(self):
        d = diagnose((y, x))
        assert d.endomorphism_residual == -2
        assert not d.is_endomorphism
        d = diagnose((x + 1, y))
        assert d.is_endomorphism and not d.is_alpha_equivariant
        assert d.alpha_residual_x == 1

    @given(family_params())
    def test_family_members_pass_both(self, p):
        g = build_family(p)
        assert is_endomorphism(g) and is_alpha_equivariant(g)


class TestFamily:
    def test_examples(self):
        assert build_family((1, 0, [])) == (x, y)
        assert build_family((F(5, 4), F(3, 4), [2])) == (
            F(5, 4) * x + F(3, 4) * y + 2,
            F(5, 4) * y + F(3, 4) * x + 2,
        )
        assert build_family((-1, 0, [])) == (-x, -y)

    def test_higher_terms_use_weyl_powers(self):
        g = build_family((1, 0, [0, 1]))
        assert g.fx == x + (x - y) * (x - y)

    def test_inverse_examples(self):
        assert family_inverse((1, 0, [])) == (x, y)
        assert family_inverse((F(5, 4), F(3, 4), [2])) == (
            F(5, 4) * x - F(3, 4) * y - 1,
            F(5, 4) * y - F(3, 4) * x - 1,
        )
        assert family_inverse((-1, 0, [])) == (-x, -y)

    @pytest.mark.parametrize("a, b", [(1, 1), (2, 1), (0, 0), (F(1, 2), 0)])
    def test_invalid_params(self, a, b):
        with pytest.raises(InvalidParams):
            FamilyParams(a, b)
        with pytest.raises(InvalidParams):
            build_family((a, b, [1]))

    def test_trailing_zeros_trimmed(self):
        assert FamilyParams(1, 0, [3, 0, 0]).c == (3,)
        assert FamilyParams(1, 0, [0]).c == ()

    @given(family_params())
    def test_inverse_is_two_sided(self, p):
        f, g = build_family(p), family_inverse(p)
        assert compose(f, g) == IDENTITY
        assert compose(g, f) == IDENTITY

    def test_lambda_conversion_symbolically(self):
        lam = sympy.symbols("lambda", nonzero=True)
        a = (-4 * lam**2 - 1) / (4 * lam)
        b = (4 * lam**2 - 1) / (4 * lam)
        assert sympy.simplify(a**2 - b**2 - 1) == 0
        assert sympy.simplify(a + b + 1 / (2 * lam)) == 0
        assert sympy.simplify(-1 / (2 * (a + b)) - lam) == 0

    @pytest.mark.parametrize("lam", [F(1, 2), F(-1, 2), F(3, 7), F(-5), F(1, 9)])
    def test_lambda_roundtrip(self, lam):
        p = FamilyParams.from_lambda(lam, [1, 2])
        assert p.lam == lam
        assert p.c == (1, 2)

    def test_lambda_zero(self):
        with pytest.raises(InvalidParams):
            FamilyParams.from_lambda(0)

    def test_images_type(self):
        assert isinstance(build_family((1, 0)), GenImages)
