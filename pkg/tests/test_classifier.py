from fractions import Fraction

import pytest
from hypothesis import given

from weylstar.classifier import (
    CanonicalForm,
    SymPair,
    classify,
    classify_sym_pair,
    decompose,
    even_odd_split,
    invert,
)
from weylstar.errors import (
    HypothesisViolation,
    NotAlphaEquivariant,
    NotEndomorphism,
    NotInCanonicalShape,
)
from weylstar.geometry import leading_term, psi
from weylstar.morphisms import IDENTITY, FamilyParams, build_family, compose
from weylstar.poly import PolyElement
from weylstar.weyl import WeylElement

from .strategies import family_params, y_polys

x, y = WeylElement.generators()
F = Fraction
HALF = F(1, 2)


class TestEvenOddSplit:
    def test_examples(self):
        assert even_odd_split(y**3 + y**2 + 1) == (y**2 + 1, y**3)
        z = WeylElement.zero()
        assert even_odd_split(z) == (z, z)
        assert even_odd_split(y) == (z, y)

    def test_rejects_x(self):
        with pytest.raises(ValueError):
            even_odd_split(x + y)

    @given(y_polys(max_deg=7))
    def test_parts(self, t):
        even, odd = even_odd_split(t)
        assert even + odd == t
        assert all(j % 2 == 0 for _, j in even.terms)
        assert all(j % 2 == 1 for _, j in odd.terms)

    def test_poly_input(self):
        Y = PolyElement.generators()[1]
        assert even_odd_split(Y**2 + Y) == (Y**2, Y)


class TestDecompose:
    def test_minus_identity(self):
        assert decompose((-x, -y)) == SymPair(-x, y / 2)

    def test_identity(self):
        assert decompose((x, y)) == SymPair(x, -y / 2)

    def test_not_equivariant(self):
        with pytest.raises(NotAlphaEquivariant) as info:
            decompose((x + 1, y))
        assert info.value.residual == 1

    def test_not_endomorphism(self):
        with pytest.raises(NotEndomorphism) as info:
            decompose((y, x))
        assert info.value.residual == -2

    def test_endomorphism_checked_first(self):
        # fails both checks; the endomorphism failure wins
        with pytest.raises(NotEndomorphism):
            decompose((2 * x, y))

    @given(family_params())
    def test_pair_relations(self, p):
        pair = decompose(build_family(p))
        assert all(not r for r in pair.residuals().values())


class TestClassifySymPair:
    def test_examples(self):
        assert classify_sym_pair(SymPair(-x, y / 2)) == (HALF, ())
        assert classify_sym_pair(SymPair(-x + y**2, y / 2)) == (HALF, (0, 1))
        assert classify_sym_pair(SymPair(x, -y / 2)) == (-HALF, ())

    def test_degenerate_p0_in_y_squared(self):
        with pytest.raises(HypothesisViolation):
            classify_sym_pair(SymPair(y**2 + 1, y / 2))
        with pytest.raises(HypothesisViolation):
            classify_sym_pair(SymPair(WeylElement.zero(), y))

    def test_wrong_bracket(self):
        with pytest.raises(HypothesisViolation) as info:
            classify_sym_pair(SymPair(-x, y))
        assert info.value.residual == HALF

    def test_not_beta_symmetric(self):
        with pytest.raises(HypothesisViolation):
            classify_sym_pair(SymPair(-x + y, y / 2))

    def test_shape_errors_are_assertions(self):
        assert issubclass(NotInCanonicalShape, AssertionError)

    @given(family_params())
    def test_p1_leading_face_is_linear_in_y(self, p):
        pair = decompose(build_family(p))
        lam, _ = classify_sym_pair(pair)
        Y = PolyElement.generators()[1]
        assert leading_term((1, 0), psi(pair.p1)) == Y.scale(lam)


class TestClassify:
    def test_examples(self):
        assert classify((-x, -y)).to_json() == {"lambda": "1/2", "a": "-1", "b": "0", "c": []}
        assert classify((x, y)).to_json() == {"lambda": "-1/2", "a": "1", "b": "0", "c": []}
        form = classify(build_family((F(5, 4), F(3, 4), [2])))
        assert (form.a, form.b, form.c) == (F(5, 4), F(3, 4), (2,))
        assert form.lam == F(-1, 4)

    def test_invert_examples(self):
        assert invert((x, y)) == (x, y)
        assert invert(build_family((F(5, 4), F(3, 4), [2]))) == (
            F(5, 4) * x - F(3, 4) * y - 1,
            F(5, 4) * y - F(3, 4) * x - 1,
        )
        with pytest.raises(NotAlphaEquivariant):
            invert((x + 1, y))

    def test_canonical_form_validation(self):
        with pytest.raises(ValueError):
            CanonicalForm(0)
        assert CanonicalForm(1, [1, 0, 0]).alphas == (1,)

    @given(family_params())
    def test_roundtrip(self, p):
        form = classify(build_family(p))
        assert form.params == p
        assert FamilyParams.from_lambda(form.lam, form.alphas) == p

    @given(family_params(max_n=2))
    def test_invert_is_two_sided(self, p):
        g = build_family(p)
        h = invert(g)
        assert compose(g, h) == IDENTITY == compose(h, g)
