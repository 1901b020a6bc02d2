"""Primitive series and triangles against independent oracles.

Stirling triangles come out of divided-power coefficient extraction in the
library; here they are checked against brute-force counting (set partitions
and permutation cycle counts) and against the triangular recurrences, which
never touch the series engine.
"""

import math
from fractions import Fraction
from itertools import permutations

import pytest

from polybell.ring import LAM, MultiPoly
from polybell.series import TruncatedSeries, t_identity
from polybell.special import (
    KIND_FIRST,
    KIND_SECOND,
    deg_exp,
    deg_exp_minus_one,
    deg_log_coeff,
    deg_log1p,
    deg_polylog,
    derangement_egf,
    derangements,
    exp_minus_one,
    exp_series,
    geometric,
    inverse_power,
    log1p,
    polylog,
    stirling_table,
)

# -- oracles -------------------------------------------------------------------


def iter_set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in iter_set_partitions(rest):
        for i in range(len(smaller)):
            yield smaller[:i] + [smaller[i] + [first]] + smaller[i + 1 :]
        yield [[first]] + smaller


def brute_partition_count(n: int, k: int) -> int:
    return sum(1 for part in iter_set_partitions(list(range(n))) if len(part) == k)


def cycle_count(perm) -> int:
    seen, cycles = set(), 0
    for start in range(len(perm)):
        if start in seen:
            continue
        cycles += 1
        j = start
        while j not in seen:
            seen.add(j)
            j = perm[j]
    return cycles


def brute_cycle_class_count(n: int, k: int) -> int:
    return sum(1 for p in permutations(range(n)) if cycle_count(p) == k)


def recurrence_triangle(max_n, weight, one):
    """Triangle T[n][k] from T[n+1][k] = T[n][k-1] + weight(n, k) * T[n][k]."""
    rows = [[one]]
    for n in range(max_n):
        prev = rows[-1]
        row = []
        for k in range(n + 2):
            left = prev[k - 1] if 1 <= k <= n + 1 else 0
            center = prev[k] if k <= n else 0
            row.append(left + weight(n, k) * center)
        rows.append(row)
    return rows


# -- exponential / logarithm -----------------------------------------------------


class TestExpLog:
    def test_log1p_textbook_terms(self):
        assert log1p(3).coeffs == (0, 1, Fraction(-1, 2), Fraction(1, 3))

    def test_exp_minus_one_terms(self):
        assert exp_minus_one(2).coeffs == (0, 1, Fraction(1, 2))

    def test_inverse_pair(self):
        assert log1p(8).compose(exp_minus_one(8)) == t_identity(8)
        assert exp_minus_one(8).compose(log1p(8)) == t_identity(8)

    def test_geometric_times_its_inverse(self):
        one_minus_t = TruncatedSeries([1, -1], order=6)
        assert geometric(6) * one_minus_t == TruncatedSeries.one(6)


class TestDegenerateExpLog:
    def test_deg_exp_at_one_quadratic_term(self):
        series = deg_exp(2, 1)
        assert series.coeffs[0] == MultiPoly.one()
        assert series.coeffs[1] == MultiPoly.one()
        assert series.coeffs[2] == (MultiPoly.one() - LAM) / 2

    def test_deg_exp_lambda_zero_is_classical(self):
        series = deg_exp(8, 1)
        for n, coeff in enumerate(series.coeffs):
            assert coeff.subs(lam=0) == Fraction(1, math.factorial(n))

    def test_deg_exp_symbolic_egf_term(self):
        x = MultiPoly.x()
        expected = x * (x - LAM) * (x - 2 * LAM)
        assert deg_exp(3).egf_term(3) == expected

    def test_deg_log_first_terms(self):
        series = deg_log1p(3)
        assert series.coeffs[0] == MultiPoly.zero()
        assert series.coeffs[1] == MultiPoly.one()
        assert series.coeffs[2] == (LAM - 1) / 2
        assert series.coeffs[3] == (LAM - 1) * (LAM - 2) / 6

    def test_deg_log_lambda_zero_is_classical(self):
        series = deg_log1p(10)
        classical = log1p(10)
        for n in range(11):
            assert series.coeffs[n].subs(lam=0) == classical.coeffs[n]

    def test_deg_log_matches_binomial_expansion(self):
        # lam * (n-th EGF term) must equal the plain falling factorial
        # lam (lam-1) ... (lam-n+1), i.e. the generalized binomial
        # coefficient numerator of (1+t)^lam.
        series = deg_log1p(10)
        for n in range(1, 11):
            product = MultiPoly.one()
            for i in range(n):
                product = product * (LAM - i)
            assert LAM * series.egf_term(n) == product

    def test_deg_inverse_pair(self):
        assert deg_log1p(8).compose(deg_exp_minus_one(8)) == t_identity(8)
        assert deg_exp_minus_one(8).compose(deg_log1p(8)) == t_identity(8)

    def test_deg_log_coeff_starts_at_one(self):
        assert deg_log_coeff(1) == MultiPoly.one()
        assert deg_log_coeff(3) == (LAM - 1) * (LAM - 2)
        with pytest.raises(ValueError):
            deg_log_coeff(0)


class TestPolylog:
    def test_index_one_is_minus_log_one_minus_t(self):
        assert polylog(1, 3).coeffs == (0, 1, Fraction(1, 2), Fraction(1, 3))

    def test_index_zero_is_geometric_tail(self):
        assert polylog(0, 2).coeffs == (0, 1, 1)

    def test_index_two(self):
        assert polylog(2, 2).coeffs == (0, 1, Fraction(1, 4))

    def test_negative_index(self):
        assert polylog(-1, 3).coeffs == (0, 1, 2, 3)

    def test_inverse_power_both_signs(self):
        assert inverse_power(3, 2) == Fraction(1, 9)
        assert inverse_power(3, -2) == 9
        assert inverse_power(5, 0) == 1

    def test_deg_index_one_is_minus_deg_log_of_one_minus_t(self):
        lixed = deg_polylog(1, 8)
        log_deg = deg_log1p(8)
        for n in range(9):
            assert lixed.coeffs[n] == (-1) ** (n - 1) * log_deg.coeffs[n]

    def test_deg_lambda_zero_is_classical(self):
        for k in (-1, 0, 1, 2, 3):
            deg = deg_polylog(k, 8)
            classical = polylog(k, 8)
            for n in range(9):
                assert deg.coeffs[n].subs(lam=0) == classical.coeffs[n]

    def test_deg_index_two_quadratic_coefficient(self):
        assert deg_polylog(2, 2).coeffs[2] == (MultiPoly.one() - LAM) / 4


# -- Stirling tables ---------------------------------------------------------


class TestStirlingTables:
    def test_second_kind_matches_partition_counts(self):
        table = stirling_table(KIND_SECOND, False, 6)
        for n in range(7):
            for k in range(n + 1):
                assert table.value(n, k) == brute_partition_count(n, k)

    def test_second_kind_example(self):
        assert stirling_table(KIND_SECOND, False, 3).value(3, 2) == 3

    def test_first_kind_unsigned_matches_cycle_counts(self):
        table = stirling_table(KIND_FIRST, False, 6)
        for n in range(7):
            for k in range(n + 1):
                assert table.unsigned(n, k) == brute_cycle_class_count(n, k)

    def test_signed_convention(self):
        table = stirling_table(KIND_FIRST, False, 5)
        assert table.value(3, 1) == 2
        assert table.value(4, 1) == -6
        for n in range(6):
            for k in range(n + 1):
                assert table.unsigned(n, k) == (-1) ** (n - k) * table.value(n, k)

    def test_boundary_entries(self):
        for kind in (KIND_FIRST, KIND_SECOND):
            for degenerate in (False, True):
                table = stirling_table(kind, degenerate, 6)
                assert table.value(0, 0) == 1
                for n in range(1, 7):
                    assert table.value(n, 0) == 0
                    assert table.value(n, n) == 1
                    assert table.value(n, n + 3) == 0

    def test_out_of_range_row(self):
        with pytest.raises(IndexError):
            stirling_table(KIND_SECOND, False, 3).value(4, 1)

    def test_unsigned_requires_first_kind(self):
        with pytest.raises(ValueError):
            stirling_table(KIND_SECOND, False, 3).unsigned(2, 1)

    def test_classical_recurrences(self):
        s2 = recurrence_triangle(8, lambda n, k: k, Fraction(1))
        s1 = recurrence_triangle(8, lambda n, k: -n, Fraction(1))
        table2 = stirling_table(KIND_SECOND, False, 8)
        table1 = stirling_table(KIND_FIRST, False, 8)
        for n in range(9):
            for k in range(n + 1):
                assert table2.value(n, k) == s2[n][k]
                assert table1.value(n, k) == s1[n][k]

    def test_degenerate_recurrences(self):
        s2 = recurrence_triangle(8, lambda n, k: k - n * LAM, MultiPoly.one())
        s1 = recurrence_triangle(8, lambda n, k: LAM * k - n, MultiPoly.one())
        table2 = stirling_table(KIND_SECOND, True, 8)
        table1 = stirling_table(KIND_FIRST, True, 8)
        for n in range(9):
            for k in range(n + 1):
                assert table2.value(n, k) == s2[n][k]
                assert table1.value(n, k) == s1[n][k]

    def test_degenerate_first_kind_example(self):
        assert stirling_table(KIND_FIRST, True, 2).value(2, 1) == LAM - 1

    def test_degenerate_second_kind_example(self):
        assert stirling_table(KIND_SECOND, True, 2).value(2, 1) == 1 - LAM

    def test_degenerate_tables_reduce_at_lambda_zero(self):
        for kind in (KIND_FIRST, KIND_SECOND):
            deg = stirling_table(kind, True, 8)
            classical = stirling_table(kind, False, 8)
            for n in range(9):
                for k in range(n + 1):
                    assert deg.value(n, k).subs(lam=0) == classical.value(n, k)

    def test_inversion_formula(self):
        for degenerate in (False, True):
            s1 = stirling_table(KIND_FIRST, degenerate, 10)
            s2 = stirling_table(KIND_SECOND, degenerate, 10)
            for n in range(11):
                for m in range(n + 1):
                    total = sum(
                        s1.value(n, k) * s2.value(k, m) for k in range(m, n + 1)
                    )
                    assert total == (1 if n == m else 0)

    def test_row_sums_are_bell_numbers(self):
        from polybell.bell import bell_poly

        table = stirling_table(KIND_SECOND, False, 8)
        for n in range(9):
            row_sum = sum(table.value(n, k) for k in range(n + 1))
            assert row_sum == bell_poly(n).number().constant()

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            stirling_table("third", False, 3)


# -- derangements -------------------------------------------------------------


class TestDerangements:
    def test_small_values(self):
        assert derangements(4).values == (1, 0, 1, 2, 9)

    def test_brute_force_fixed_point_free_count(self):
        for n in range(7):
            count = sum(
                1
                for p in permutations(range(n))
                if all(p[i] != i for i in range(n))
            )
            assert derangements(n).values[n] == count

    def test_egf_path_matches_recurrence_path(self):
        egf = derangement_egf(12).egf_terms()
        assert egf == derangements(12).values

    def test_sequence_protocol(self):
        seq = derangements(5)
        assert seq[3] == 2
        assert len(seq) == 6

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            derangements(-1)
