"""Series engine: arithmetic, composition, reversion, derivative, EGF view."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polybell.ring import MultiPoly, X
from polybell.series import TruncatedSeries, count_coeff_mults, t_identity
from polybell.special import exp_minus_one, log1p

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=10)


def series_strategy(min_order=1, max_order=8, zero_constant=False, unit_linear=False):
    def build(coeffs):
        values = list(coeffs)
        if zero_constant:
            values[0] = Fraction(0)
        if unit_linear:
            values[1] = Fraction(1)
        return TruncatedSeries(values)

    return st.lists(
        rationals, min_size=min_order + 1, max_size=max_order + 1
    ).map(build)


class TestBasics:
    def test_construction_pads_and_truncates(self):
        s = TruncatedSeries([1, 2], order=4)
        assert s.order == 4
        assert s.coeffs == (1, 2, 0, 0, 0)
        assert TruncatedSeries([1, 2, 3], order=1).coeffs == (1, 2)

    def test_empty_requires_order(self):
        with pytest.raises(ValueError):
            TruncatedSeries([])
        assert TruncatedSeries.zero(2).coeffs == (0, 0, 0)

    def test_coefficient_bounds(self):
        s = t_identity(3)
        with pytest.raises(IndexError):
            s.coefficient(4)

    def test_egf_accessor(self):
        assert t_identity(1).egf_terms() == (0, 1)
        assert exp_minus_one(3).egf_terms() == (0, 1, 1, 1)
        f = TruncatedSeries([Fraction(1), Fraction(1, 2), Fraction(1, 6)])
        assert f.egf_term(2) == Fraction(1, 3)

    def test_mixed_order_arithmetic_truncates(self):
        a = TruncatedSeries([1, 1, 1, 1])
        b = TruncatedSeries([1, -1])
        assert (a + b).coeffs == (2, 0)
        assert (a - b).coeffs == (0, 2)


class TestMultiplication:
    def test_difference_of_squares(self):
        one_plus = TruncatedSeries([1, 1], order=2)
        one_minus = TruncatedSeries([1, -1], order=2)
        assert (one_plus * one_minus).coeffs == (1, 0, -1)

    def test_identity_factor(self):
        f = TruncatedSeries([Fraction(1, 3), 2, 5])
        assert (f * TruncatedSeries.one(2)).coeffs == f.coeffs

    def test_square_of_shifted_log(self):
        # (t + t^2/2)^2 = t^2 + t^3 + ... truncated at order 3
        u = TruncatedSeries([0, 1, Fraction(1, 2)], order=3)
        assert (u * u).coeffs == (0, 0, 1, 1)

    def test_polynomial_coefficients(self):
        f = TruncatedSeries([MultiPoly.one(), X], order=2)
        assert (f * f).coeffs == (MultiPoly.one(), 2 * X, X * X)


class TestComposition:
    def test_identity_inner(self):
        f = TruncatedSeries([3, Fraction(1, 2), 7, -1])
        assert f.compose(t_identity(3)) == f

    def test_log_exp_inverse_pair(self):
        assert log1p(6).compose(exp_minus_one(6)) == t_identity(6)

    def test_iterated_log(self):
        inner = log1p(3)
        expected = TruncatedSeries([0, 1, -1, Fraction(7, 6)])
        assert log1p(3).compose(inner) == expected

    def test_rejects_nonzero_constant_inner(self):
        with pytest.raises(ValueError):
            log1p(3).compose(TruncatedSeries([1, 1], order=3))

    @given(
        series_strategy(),
        series_strategy(zero_constant=True),
        series_strategy(zero_constant=True),
    )
    @settings(max_examples=40, deadline=None)
    def test_composition_associative(self, f, g, h):
        assert f.compose(g).compose(h) == f.compose(g.compose(h))

    @given(series_strategy(min_order=2), series_strategy(min_order=2, zero_constant=True))
    @settings(max_examples=40, deadline=None)
    def test_chain_rule(self, f, g):
        lhs = f.compose(g).derivative()
        rhs = f.derivative().compose(g.truncate(g.order - 1)) * g.derivative()
        assert lhs == rhs


class TestDerivative:
    def test_monomial(self):
        assert TruncatedSeries([0, 0, 1]).derivative().coeffs == (0, 2)

    def test_constant(self):
        assert TruncatedSeries([5], order=3).derivative().coeffs == (0, 0, 0)

    def test_order_zero_rejected(self):
        with pytest.raises(ValueError):
            TruncatedSeries([1]).derivative()


class TestReciprocal:
    def test_geometric(self):
        one_minus_t = TruncatedSeries([1, -1], order=4)
        assert one_minus_t.reciprocal().coeffs == (1, 1, 1, 1, 1)

    def test_zero_constant_rejected(self):
        with pytest.raises(ZeroDivisionError):
            t_identity(3).reciprocal()


class TestReversion:
    def test_identity(self):
        assert t_identity(5).revert() == t_identity(5)

    def test_scaled_linear(self):
        f = TruncatedSeries([0, Fraction(2)], order=3)
        g = f.revert()
        assert g.compose(f) == t_identity(3)

    def test_rejects_bad_leading_terms(self):
        with pytest.raises(ValueError):
            TruncatedSeries([1, 1]).revert()
        with pytest.raises(ZeroDivisionError):
            TruncatedSeries([0, 0, 1]).revert()

    @given(series_strategy(min_order=1, max_order=12, zero_constant=True, unit_linear=True))
    @settings(max_examples=60, deadline=None)
    def test_round_trip(self, f):
        g = f.revert()
        assert f.compose(g) == t_identity(f.order)
        assert g.compose(f) == t_identity(f.order)

    @given(series_strategy(min_order=1, max_order=10, zero_constant=True, unit_linear=True))
    @settings(max_examples=40, deadline=None)
    def test_involution(self, f):
        assert f.revert().revert() == f

    @given(series_strategy(min_order=1, max_order=10, zero_constant=True, unit_linear=True))
    @settings(max_examples=40, deadline=None)
    def test_newton_matches_lagrange(self, f):
        assert f.revert() == f.revert_lagrange()

    def test_polynomial_coefficient_ring(self):
        # Reversion works over Q[lam, x] when the linear term is a unit.
        f = TruncatedSeries([MultiPoly.zero(), MultiPoly.one(), X], order=4)
        g = f.revert()
        assert f.compose(g) == TruncatedSeries([0, 1], order=4)
        assert g == f.revert_lagrange()


class TestInstrumentation:
    def test_counter_records_multiplications(self):
        f = exp_minus_one(8)
        with count_coeff_mults() as counter:
            f * f
        assert counter.mults > 0
        before = counter.mults
        f * f  # outside the block: not counted
        assert counter.mults == before
