"""Polynomial ring: arithmetic, substitution, rendering, ring axioms."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polybell.ring import LAM, X, MultiPoly, as_fraction, falling_factorial

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=12)

monomials = st.tuples(st.integers(0, 3), st.integers(0, 3))


@st.composite
def polys(draw):
    terms = draw(st.dictionaries(monomials, rationals, max_size=4))
    return MultiPoly(terms)


class TestConstruction:
    def test_zero_has_no_terms(self):
        assert MultiPoly({(1, 0): 0, (0, 2): Fraction(0)}).is_zero()

    def test_terms_deduplicate_via_dict_keys(self):
        p = MultiPoly({(1, 1): Fraction(3, 2)})
        assert p.coefficient(1, 1) == Fraction(3, 2)
        assert p.coefficient(0, 0) == 0

    def test_negative_exponents_rejected(self):
        with pytest.raises(ValueError):
            MultiPoly({(-1, 0): 1})

    def test_as_fraction_parses_ratio_strings(self):
        assert as_fraction("-7/2") == Fraction(-7, 2)
        assert as_fraction(3) == 3
        with pytest.raises(TypeError):
            as_fraction(1.5)


class TestArithmetic:
    def test_degree_one_product(self):
        assert LAM * (LAM - 1) == MultiPoly({(2, 0): 1, (1, 0): -1})

    def test_multiplicative_identity(self):
        p = MultiPoly({(2, 1): Fraction(5, 3), (0, 0): -2})
        assert p * MultiPoly.one() == p

    def test_cubic_expansion(self):
        product = (LAM - 1) * (LAM - 2) * (LAM - 3)
        expected = MultiPoly({(3, 0): 1, (2, 0): -6, (1, 0): 11, (0, 0): -6})
        assert product == expected

    def test_scalar_mixing(self):
        p = 2 * X - Fraction(1, 2)
        assert p == MultiPoly({(0, 1): 2, (0, 0): Fraction(-1, 2)})
        assert 1 - X == MultiPoly({(0, 0): 1, (0, 1): -1})

    def test_power(self):
        assert (LAM + X) ** 2 == LAM * LAM + 2 * LAM * X + X * X
        assert (LAM + 1) ** 0 == MultiPoly.one()
        with pytest.raises(ValueError):
            (LAM + 1) ** -1

    def test_division_by_constant(self):
        assert (2 * X) / 4 == X / 2
        with pytest.raises(ZeroDivisionError):
            X / 0
        with pytest.raises(ValueError):
            X / LAM


class TestSubstitution:
    def test_lambda_zero_evaluation(self):
        assert (2 * (LAM - 1)).subs(lam=0) == -2

    def test_noop_substitution(self):
        p = LAM * X - 3
        assert p.subs() == p

    def test_root_substitution(self):
        p = LAM * LAM * X - X
        assert p.subs(lam=1).is_zero()

    def test_full_substitution_gives_constant(self):
        p = LAM * X + X
        value = p.subs(lam=Fraction(1, 2), x=2)
        assert value.is_constant()
        assert value.constant() == 3

    def test_constant_of_nonconstant_raises(self):
        with pytest.raises(ValueError):
            (LAM + 1).constant()

    @given(polys(), polys(), rationals, rationals)
    @settings(max_examples=60)
    def test_substitution_is_a_ring_homomorphism(self, a, b, lv, xv):
        assert (a * b).subs(lam=lv, x=xv) == a.subs(lam=lv, x=xv) * b.subs(lam=lv, x=xv)
        assert (a + b).subs(lam=lv, x=xv) == a.subs(lam=lv, x=xv) + b.subs(lam=lv, x=xv)


class TestRingAxioms:
    @given(polys(), polys(), polys())
    @settings(max_examples=60)
    def test_mul_associative_commutative_distributive(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c

    @given(polys(), polys(), polys())
    @settings(max_examples=60)
    def test_additive_group(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a + MultiPoly.zero() == a
        assert (a - a).is_zero()


class TestFallingFactorial:
    def test_empty_product(self):
        assert falling_factorial(0) == MultiPoly.one()
        assert falling_factorial(0, 5) == MultiPoly.one()

    def test_two_factors_symbolic(self):
        assert falling_factorial(2) == X * X - LAM * X

    def test_three_factors_at_one(self):
        # (1)(1-lam)(1-2lam), expanded by hand
        expected = MultiPoly({(2, 0): 2, (1, 0): -3, (0, 0): 1})
        assert falling_factorial(3, 1) == expected

    def test_negative_length_rejected(self):
        with pytest.raises(ValueError):
            falling_factorial(-1)


class TestRendering:
    def test_graded_lex_order_and_powers(self):
        p = (LAM - 1) * (LAM - 2) * (LAM - 3)
        assert str(p) == "lam^3 - 6*lam^2 + 11*lam - 6"

    def test_mixed_variables(self):
        p = (LAM - 1) * (X + X * X)
        assert str(p) == "lam*x^2 + lam*x - x^2 - x"

    def test_unit_coefficients_and_constants(self):
        assert str(MultiPoly.zero()) == "0"
        assert str(X - LAM) == "-lam + x"
        assert str(MultiPoly({(0, 1): Fraction(1, 2)})) == "1/2*x"

    def test_terms_are_sorted_structured_view(self):
        p = X + LAM * X + 2
        assert [m for m, _ in p.terms()] == [(1, 1), (0, 1), (0, 0)]
