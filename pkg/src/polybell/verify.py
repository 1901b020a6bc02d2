"""Machine checker for the identities connecting the Bell-type families.

Every check compares exact polynomials (in x, and lam for the degenerate
identities); a pass means ring equality at every index in range, and a fail
carries the first counterexample, rendered in the deterministic text form.

Checkable identities:

  T1   alternating second-kind Bell numbers as cycle-weighted sums:
       (-1)^(n-1) bel_n = sum_k (k-1)! |S1(n,k)|, with bel_n taken from the
       independent reversion path.
  T2   sum_k bel_{k+1}(-1) S2(n,k) = -d_n against the derangement recurrence.
  T3   bel_1 = 1 and the double sum sum_{j,k} bel_k S2(j,k) S2(n,j) vanishes
       for n >= 2 (coefficients of the identity series).
  T4   x^n = (-1)^(n-1)/(n-1)! * sum_k bel_k(x) S2(n,k), symbolic in x.
  T5   bel_{n,lam} = sum_k prod_{j<k}(lam-j) S1_lam(n,k), with the left side
       from the degenerate reversion path.
  T6   corrected inverse expansion: x^n prod_{j<n}(lam-j) =
       sum_k bel_{k,lam}(x) S2_lam(n,k).  The printed variant of this
       identity (left side plain x^n) is kept as `T6_as_printed`; it is
       wrong for n >= 2 and the check documents its first counterexample.
  T7   degenerate analogue of T3.
  T8   poly family explicit formula against its generating function.
  T9   x^n = n^(k-1)/(n-1)! sum_l (-1)^(n-l) bel_l^(k)(x) S2(n,l).
  T10  degenerate poly family explicit formula against its GF.
  T11  prod_{j<n}(lam-j) (-1)^(n-1) x^n / n^(k-1) =
       sum_l (-1)^(n-l) bel_{l,lam}^(k)(x) S2_lam(n,l).

  EQ20_22_chain      derivative-of-logarithm chain: d/dt log(1+x log(1+t))
                     at x=-1, substituted with exp(t)-1, equals
                     -exp(-t)/(1-t) termwise.
  REDUCE_LAMBDA0     lam=0 sends every degenerate table and family to its
                     classical counterpart.
  REDUCE_K1          index-1 poly families equal the plain second-kind
                     families up to the sign (-1)^(n-1).
  REVERSION_DUALITY  reverting the Bell-number GF yields the second-kind GF,
                     classically and degenerately.

T8-T11 need a poly index range; `check` refuses to guess one, while
`check_all` falls back to K_RANGE_DEFAULT.  Degenerate identities default to
max_n = 8 and classical ones to 12 (lam-degree growth, not correctness,
is the only reason).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import bell
from .ring import MultiPoly
from .series import t_identity
from .special import (
    KIND_FIRST,
    KIND_SECOND,
    deg_log_coeff,
    deg_polylog,
    derangements,
    derangement_egf,
    exp_minus_one,
    inverse_power,
    log1p,
    polylog,
    stirling_table,
)

THEOREM_IDS: tuple[str, ...] = (
    "T1",
    "T2",
    "T3",
    "T4",
    "T5",
    "T6",
    "T7",
    "T8",
    "T9",
    "T10",
    "T11",
    "EQ20_22_chain",
    "REDUCE_LAMBDA0",
    "REDUCE_K1",
    "REVERSION_DUALITY",
    "T6_as_printed",
)

# `check_all` runs everything except the deliberately failing printed form.
CHECK_ALL_IDS: tuple[str, ...] = THEOREM_IDS[:-1]

POLY_INDEX_IDS = frozenset({"T8", "T9", "T10", "T11"})
DEGENERATE_IDS = frozenset(
    {"T5", "T6", "T6_as_printed", "T7", "T10", "T11", "REDUCE_LAMBDA0"}
)

K_RANGE_DEFAULT: tuple[int, ...] = (-1, 0, 1, 2, 3)
CLASSICAL_MAX_N_DEFAULT = 12
DEGENERATE_MAX_N_DEFAULT = 8
REDUCE_K1_MAX_N_DEFAULT = 10

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_ERROR = "error"


@dataclass(frozen=True)
class Counterexample:
    n: int
    k: int | None
    lhs: str
    rhs: str


@dataclass(frozen=True)
class VerificationReport:
    theorem: str
    max_n: int
    status: str
    counterexample: Counterexample | None
    elapsed_s: float
    detail: str | None = None

    @property
    def passed(self) -> bool:
        return self.status == STATUS_PASS


def _mismatch(n: int, lhs: object, rhs: object, k: int | None = None) -> Counterexample:
    return Counterexample(n=n, k=k, lhs=str(lhs), rhs=str(rhs))


def _x_power(n: int) -> MultiPoly:
    return MultiPoly.monomial(0, n)


# -- individual checkers (return the first counterexample or None) ----------


def _check_t1(max_n: int, k_range) -> Counterexample | None:
    reverted = bell.gf_bell_numbers(max_n).revert()
    s1 = stirling_table(KIND_FIRST, False, max_n)
    for n in range(1, max_n + 1):
        lhs = (-1) ** (n - 1) * reverted.egf_term(n)
        rhs = sum(
            math.factorial(k - 1) * s1.unsigned(n, k) for k in range(1, n + 1)
        )
        if lhs != rhs:
            return _mismatch(n, lhs, rhs)
    return None


def _bell2_numbers_via_sum(max_n: int) -> list[Fraction]:
    values = [Fraction(0)]
    for n in range(1, max_n + 1):
        values.append(bell.bell2_poly(n).number().constant())
    return values


def _check_t2(max_n: int, k_range) -> Counterexample | None:
    d = derangements(max_n)
    s2 = stirling_table(KIND_SECOND, False, max_n)
    at_minus_one = [
        bell.bell2_poly(k + 1).value.subs(x=-1).constant() for k in range(max_n + 1)
    ]
    for n in range(max_n + 1):
        lhs = sum(at_minus_one[k] * s2.value(n, k) for k in range(n + 1))
        rhs = -d[n]
        if lhs != rhs:
            return _mismatch(n, lhs, rhs)
    return None


def _check_t3(max_n: int, k_range) -> Counterexample | None:
    bel = _bell2_numbers_via_sum(max_n)
    if bel[1] != 1:
        return _mismatch(1, bel[1], 1)
    s2 = stirling_table(KIND_SECOND, False, max_n)
    for n in range(1, max_n + 1):
        total = sum(
            bel[k] * s2.value(j, k) * s2.value(n, j)
            for j in range(1, n + 1)
            for k in range(1, j + 1)
        )
        expected = 1 if n == 1 else 0
        if total != expected:
            return _mismatch(n, total, expected)
    return None


def _check_t4(max_n: int, k_range) -> Counterexample | None:
    s2 = stirling_table(KIND_SECOND, False, max_n)
    polys = [MultiPoly.zero()] + [
        bell.bell2_poly(k).value for k in range(1, max_n + 1)
    ]
    for n in range(1, max_n + 1):
        acc = MultiPoly.zero()
        for k in range(1, n + 1):
            acc = acc + polys[k] * s2.value(n, k)
        rhs = acc * Fraction((-1) ** (n - 1), math.factorial(n - 1))
        lhs = _x_power(n)
        if lhs != rhs:
            return _mismatch(n, lhs, rhs)
    return None


def _check_t5(max_n: int, k_range) -> Counterexample | None:
    reverted = bell.gf_deg_bell_numbers(max_n).revert()
    s1 = stirling_table(KIND_FIRST, True, max_n)
    for n in range(1, max_n + 1):
        lhs = reverted.egf_term(n)
        rhs = MultiPoly.zero()
        for k in range(1, n + 1):
            rhs = rhs + deg_log_coeff(k) * s1.value(n, k)
        if lhs != rhs:
            return _mismatch(n, lhs, rhs)
    return None


def _t6_rhs(n: int, s2d, polys) -> MultiPoly:
    acc = MultiPoly.zero()
    for k in range(1, n + 1):
        acc = acc + polys[k] * s2d.value(n, k)
    return acc


def _check_t6(max_n: int, k_range) -> Counterexample | None:
    s2d = stirling_table(KIND_SECOND, True, max_n)
    polys = [MultiPoly.zero()] + [
        bell.deg_bell2_poly(k).value for k in range(1, max_n + 1)
    ]
    for n in range(1, max_n + 1):
        lhs = _x_power(n) * deg_log_coeff(n)
        rhs = _t6_rhs(n, s2d, polys)
        if lhs != rhs:
            return _mismatch(n, lhs, rhs)
    return None


def _check_t6_as_printed(max_n: int, k_range) -> Counterexample | None:
    s2d = stirling_table(KIND_SECOND, True, max_n)
    polys = [MultiPoly.zero()] + [
        bell.deg_bell2_poly(k).value for k in range(1, max_n + 1)
    ]
    for n in range(1, max_n + 1):
        lhs = _x_power(n)
        rhs = _t6_rhs(n, s2d, polys)
        if lhs != rhs:
            return _mismatch(n, lhs, rhs)
    return None


def _check_t7(max_n: int, k_range) -> Counterexample | None:
    numbers = [MultiPoly.zero()] + [
        bell.deg_bell2_poly(k).number() for k in range(1, max_n + 1)
    ]
    if numbers[1] != 1:
        return _mismatch(1, numbers[1], 1)
    s2d = stirling_table(KIND_SECOND, True, max_n)
    for n in range(1, max_n + 1):
        total = MultiPoly.zero()
        for j in range(1, n + 1):
            inner = MultiPoly.zero()
            for k in range(1, j + 1):
                inner = inner + numbers[k] * s2d.value(j, k)
            total = total + inner * s2d.value(n, j)
        expected = MultiPoly.one() if n == 1 else MultiPoly.zero()
        if total != expected:
            return _mismatch(n, total, expected)
    return None


def _check_t8(max_n: int, k_range: Sequence[int]) -> Counterexample | None:
    for k in k_range:
        gf = bell.gf_poly_bell2(k, max_n)
        for n in range(1, max_n + 1):
            lhs = gf.egf_term(n)
            rhs = bell.poly_bell2(n, k).value
            if lhs != rhs:
                return _mismatch(n, lhs, rhs, k=k)
    return None


def _check_t9(max_n: int, k_range: Sequence[int]) -> Counterexample | None:
    s2 = stirling_table(KIND_SECOND, False, max_n)
    for k in k_range:
        polys = [MultiPoly.zero()] + [
            bell.poly_bell2(l, k).value for l in range(1, max_n + 1)
        ]
        for n in range(1, max_n + 1):
            acc = MultiPoly.zero()
            for l in range(1, n + 1):
                acc = acc + (-1) ** (n - l) * polys[l] * s2.value(n, l)
            rhs = acc * Fraction(1, math.factorial(n - 1)) / inverse_power(n, k - 1)
            lhs = _x_power(n)
            if lhs != rhs:
                return _mismatch(n, lhs, rhs, k=k)
    return None


def _check_t10(max_n: int, k_range: Sequence[int]) -> Counterexample | None:
    for k in k_range:
        gf = bell.gf_deg_poly_bell2(k, max_n)
        for n in range(1, max_n + 1):
            lhs = (-1) ** (n - 1) * gf.egf_term(n)
            rhs = (-1) ** (n - 1) * bell.deg_poly_bell2(n, k).value
            if lhs != rhs:
                return _mismatch(n, lhs, rhs, k=k)
    return None


def _check_t11(max_n: int, k_range: Sequence[int]) -> Counterexample | None:
    s2d = stirling_table(KIND_SECOND, True, max_n)
    for k in k_range:
        polys = [MultiPoly.zero()] + [
            bell.deg_poly_bell2(l, k).value for l in range(1, max_n + 1)
        ]
        for n in range(1, max_n + 1):
            lhs = (
                (-1) ** (n - 1)
                * inverse_power(n, k - 1)
                * deg_log_coeff(n)
                * _x_power(n)
            )
            rhs = MultiPoly.zero()
            for l in range(1, n + 1):
                rhs = rhs + (-1) ** (n - l) * polys[l] * s2d.value(n, l)
            if lhs != rhs:
                return _mismatch(n, lhs, rhs, k=k)
    return None


def _check_eq20_22_chain(max_n: int, k_range) -> Counterexample | None:
    # One extra order so the derivative still reaches t^max_n.
    at_minus_one = log1p(max_n + 1).compose(log1p(max_n + 1).scale(Fraction(-1)))
    chained = at_minus_one.derivative().compose(exp_minus_one(max_n))
    target = -derangement_egf(max_n)
    for n in range(max_n + 1):
        if chained.coefficient(n) != target.coefficient(n):
            return _mismatch(n, chained.coefficient(n), target.coefficient(n))
    return None


def _check_reduce_lambda0(max_n: int, k_range) -> Counterexample | None:
    k_values = K_RANGE_DEFAULT if k_range is None else tuple(k_range)
    for kind in (KIND_FIRST, KIND_SECOND):
        deg = stirling_table(kind, True, max_n)
        classical = stirling_table(kind, False, max_n)
        for n in range(max_n + 1):
            for k in range(n + 1):
                specialized = deg.value(n, k).subs(lam=0)
                if specialized != classical.value(n, k):
                    return _mismatch(
                        n, specialized, classical.value(n, k), k=k
                    )
    pairs: list[tuple[Callable[[int], MultiPoly], Callable[[int], MultiPoly], int]] = [
        (
            lambda n: bell.deg_bell_poly(n).value,
            lambda n: bell.bell_poly(n).value,
            0,
        ),
        (
            lambda n: bell.deg_bell2_poly(n).value,
            lambda n: bell.bell2_poly(n).value,
            1,
        ),
    ]
    for k in k_values:
        pairs.append(
            (
                lambda n, k=k: bell.deg_poly_bell2(n, k).value,
                lambda n, k=k: bell.poly_bell2(n, k).value,
                1,
            )
        )
    for degenerate, classical_fn, start in pairs:
        for n in range(start, max_n + 1):
            specialized = degenerate(n).subs(lam=0)
            if specialized != classical_fn(n):
                return _mismatch(n, specialized, classical_fn(n))
    return None


def _check_reduce_k1(max_n: int, k_range) -> Counterexample | None:
    for n in range(1, max_n + 1):
        sign = (-1) ** (n - 1)
        lhs = bell.poly_bell2(n, 1).value
        rhs = sign * bell.bell2_poly(n).value
        if lhs != rhs:
            return _mismatch(n, lhs, rhs, k=1)
        lhs_deg = bell.deg_poly_bell2(n, 1).value
        rhs_deg = sign * bell.deg_bell2_poly(n).value
        if lhs_deg != rhs_deg:
            return _mismatch(n, lhs_deg, rhs_deg, k=1)
    return None


def _check_reversion_duality(max_n: int, k_range) -> Counterexample | None:
    classical_n = max_n
    reverted = bell.gf_bell_numbers(classical_n).revert()
    direct = bell.gf_bell2_numbers(classical_n)
    for n in range(classical_n + 1):
        if reverted.coefficient(n) != direct.coefficient(n):
            return _mismatch(n, reverted.coefficient(n), direct.coefficient(n))
    deg_n = min(max_n, DEGENERATE_MAX_N_DEFAULT)
    reverted_deg = bell.gf_deg_bell_numbers(deg_n).revert()
    direct_deg = bell.gf_deg_bell2_numbers(deg_n)
    for n in range(deg_n + 1):
        if reverted_deg.coefficient(n) != direct_deg.coefficient(n):
            return _mismatch(
                n, reverted_deg.coefficient(n), direct_deg.coefficient(n)
            )
    return None


_CHECKERS: dict[str, Callable] = {
    "T1": _check_t1,
    "T2": _check_t2,
    "T3": _check_t3,
    "T4": _check_t4,
    "T5": _check_t5,
    "T6": _check_t6,
    "T6_as_printed": _check_t6_as_printed,
    "T7": _check_t7,
    "T8": _check_t8,
    "T9": _check_t9,
    "T10": _check_t10,
    "T11": _check_t11,
    "EQ20_22_chain": _check_eq20_22_chain,
    "REDUCE_LAMBDA0": _check_reduce_lambda0,
    "REDUCE_K1": _check_reduce_k1,
    "REVERSION_DUALITY": _check_reversion_duality,
}


def default_max_n(theorem: str) -> int:
    if theorem == "REDUCE_K1":
        return REDUCE_K1_MAX_N_DEFAULT
    if theorem in DEGENERATE_IDS:
        return DEGENERATE_MAX_N_DEFAULT
    return CLASSICAL_MAX_N_DEFAULT


def check(
    theorem: str,
    max_n: int | None = None,
    k_range: Iterable[int] | None = None,
) -> VerificationReport:
    """Run one identity check up to max_n, fail-fast with a counterexample.

    T8-T11 require an explicit k_range of polylogarithm indices.
    """
    if theorem not in _CHECKERS:
        raise ValueError(f"unknown theorem id {theorem!r}")
    resolved_max = default_max_n(theorem) if max_n is None else max_n
    if resolved_max < 1:
        raise ValueError("max_n must be >= 1")
    ks = None if k_range is None else tuple(k_range)
    if theorem in POLY_INDEX_IDS and not ks:
        raise ValueError(f"{theorem} needs a k_range of polylogarithm indices")
    start = time.perf_counter()
    counterexample = _CHECKERS[theorem](resolved_max, ks)
    elapsed = time.perf_counter() - start
    status = STATUS_PASS if counterexample is None else STATUS_FAIL
    return VerificationReport(
        theorem=theorem,
        max_n=resolved_max,
        status=status,
        counterexample=counterexample,
        elapsed_s=elapsed,
    )


def check_all(
    max_n: int | None = None,
    k_range: Iterable[int] | None = None,
) -> list[VerificationReport]:
    """Run every identity (printed T6 variant excluded) in a fixed order.

    With k_range None the poly identities use K_RANGE_DEFAULT; with an
    explicitly empty k_range they are reported as errors while the rest run.
    """
    ks = K_RANGE_DEFAULT if k_range is None else tuple(k_range)
    reports = []
    for theorem in CHECK_ALL_IDS:
        try:
            reports.append(check(theorem, max_n=max_n, k_range=ks))
        except ValueError as exc:
            reports.append(
                VerificationReport(
                    theorem=theorem,
                    max_n=default_max_n(theorem) if max_n is None else max_n,
                    status=STATUS_ERROR,
                    counterexample=None,
                    elapsed_s=0.0,
                    detail=str(exc),
                )
            )
    return reports
