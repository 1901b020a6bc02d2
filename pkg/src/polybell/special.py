"""Primitive series and triangles: exponentials, logarithms, their degenerate
deformations, polylogarithms, Stirling triangles and derangement numbers.

The degenerate exponential is (1 + lam*t)**(x/lam) expanded with step-lam
falling factorials, so its EGF term n is x (x - lam) ... (x - (n-1) lam);
it reduces to exp(x*t) at lam = 0.  Its compositional inverse partner, the
degenerate logarithm of 1 + t, has EGF term n equal to the limit-free
product (lam - 1)(lam - 2)...(lam - (n-1)); no 1/lam ever appears.

Stirling triangles are produced definitionally, as n! * [t^n] of the k-th
divided power of the defining series (log(1+t) and exp(t)-1 classically,
their degenerate deformations otherwise).  The triangular recurrences are
exercised as independent oracles in the test suite, not used here.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .ring import MultiPoly, Scalar, falling_factorial
from .series import TruncatedSeries

KIND_FIRST = "first"
KIND_SECOND = "second"

TableEntry = Union[Fraction, MultiPoly]


# -- exponential / logarithm building blocks --------------------------------


def exp_series(order: int) -> TruncatedSeries:
    """exp(t): c_n = 1/n!."""
    return TruncatedSeries([Fraction(1, math.factorial(n)) for n in range(order + 1)])


def exp_minus_one(order: int) -> TruncatedSeries:
    """exp(t) - 1."""
    coeffs = [Fraction(1, math.factorial(n)) for n in range(order + 1)]
    coeffs[0] = Fraction(0)
    return TruncatedSeries(coeffs)


def log1p(order: int) -> TruncatedSeries:
    """log(1 + t): c_n = (-1)^(n+1) / n."""
    coeffs: list[Fraction] = [Fraction(0)]
    coeffs.extend(Fraction((-1) ** (n + 1), n) for n in range(1, order + 1))
    return TruncatedSeries(coeffs, order=order)


def geometric(order: int) -> TruncatedSeries:
    """1 / (1 - t): all coefficients 1."""
    return TruncatedSeries([Fraction(1)] * (order + 1))


def deg_log_coeff(n: int) -> MultiPoly:
    """EGF term n of the degenerate logarithm: prod_{j=1}^{n-1} (lam - j).

    Empty product (n <= 1) is 1; n = 0 has no series term and is rejected.
    """
    if n < 1:
        raise ValueError("degenerate logarithm terms start at n = 1")
    result = MultiPoly.one()
    for j in range(1, n):
        result = result * (MultiPoly.lam() - j)
    return result


def deg_exp(order: int, x: Scalar | None = None) -> TruncatedSeries:
    """Degenerate exponential: c_n = (x)(x-lam)...(x-(n-1)lam) / n!.

    ``x=None`` keeps x symbolic; ``x=1`` gives the one-parameter version
    whose inverse partner is the degenerate logarithm.
    """
    coeffs = [
        falling_factorial(n, x) / math.factorial(n) for n in range(order + 1)
    ]
    return TruncatedSeries(coeffs)


def deg_exp_minus_one(order: int) -> TruncatedSeries:
    """Degenerate exponential at x = 1, constant term dropped."""
    coeffs = list(deg_exp(order, 1).coeffs)
    coeffs[0] = MultiPoly.zero()
    return TruncatedSeries(coeffs)


def deg_log1p(order: int) -> TruncatedSeries:
    """Degenerate logarithm of 1 + t: EGF term n is prod_{j<n} (lam - j)."""
    coeffs: list[MultiPoly] = [MultiPoly.zero()]
    coeffs.extend(
        deg_log_coeff(n) / math.factorial(n) for n in range(1, order + 1)
    )
    return TruncatedSeries(coeffs, order=order)


# -- polylogarithms ----------------------------------------------------------


def inverse_power(n: int, k: int) -> Fraction:
    """n^(-k) as an exact rational, for any integer k."""
    if n < 1:
        raise ValueError("inverse powers need n >= 1")
    return Fraction(1, n**k) if k >= 0 else Fraction(n ** (-k))


def polylog(k: int, order: int) -> TruncatedSeries:
    """Polylogarithm of integer index k: c_n = 1/n^k for n >= 1.

    Index 1 is -log(1 - t); index 0 is the geometric series minus 1.
    Nonpositive k turns the division into multiplication by n^(-k).
    """
    coeffs: list[Fraction] = [Fraction(0)]
    coeffs.extend(inverse_power(n, k) for n in range(1, order + 1))
    return TruncatedSeries(coeffs, order=order)


def deg_polylog(k: int, order: int) -> TruncatedSeries:
    """Degenerate polylogarithm of index k.

    c_n = (-1)^(n-1) * prod_{j<n}(lam - j) / ((n-1)! * n^k); index 1 is
    the negated degenerate logarithm of 1 - t, and lam = 0 recovers the
    classical polylogarithm.
    """
    coeffs: list[MultiPoly] = [MultiPoly.zero()]
    for n in range(1, order + 1):
        weight = inverse_power(n, k) * Fraction((-1) ** (n - 1), math.factorial(n - 1))
        coeffs.append(deg_log_coeff(n) * weight)
    return TruncatedSeries(coeffs, order=order)


# -- Stirling triangles ------------------------------------------------------


@dataclass(frozen=True)
class StirlingTable:
    """Triangular table of Stirling-type connection coefficients.

    Entries are Fractions for classical tables and polynomials in lam for
    degenerate ones.  ``entries[n][k]`` is defined for 0 <= k <= n <= max_n;
    out-of-triangle lookups return zero.
    """

    kind: str
    degenerate: bool
    max_n: int
    entries: tuple[tuple[TableEntry, ...], ...]

    def value(self, n: int, k: int) -> TableEntry:
        if n < 0 or n > self.max_n:
            raise IndexError(f"row {n} outside table (max_n={self.max_n})")
        if k < 0 or k > n:
            return MultiPoly.zero() if self.degenerate else Fraction(0)
        return self.entries[n][k]

    def unsigned(self, n: int, k: int) -> TableEntry:
        """|entry| for first-kind tables, via the sign flip (-1)^(n-k)."""
        if self.kind != KIND_FIRST:
            raise ValueError("unsigned entries only exist for first-kind tables")
        return (-1) ** (n - k) * self.value(n, k)

    def row(self, n: int) -> tuple[TableEntry, ...]:
        return self.entries[n]


@functools.lru_cache(maxsize=None)
def stirling_table(kind: str, degenerate: bool, max_n: int) -> StirlingTable:
    """Build a Stirling triangle by divided-power coefficient extraction."""
    if kind not in (KIND_FIRST, KIND_SECOND):
        raise ValueError(f"unknown Stirling kind {kind!r}")
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    if degenerate:
        base = deg_log1p(max_n) if kind == KIND_FIRST else deg_exp_minus_one(max_n)
        zero: TableEntry = MultiPoly.zero()
    else:
        base = log1p(max_n) if kind == KIND_FIRST else exp_minus_one(max_n)
        zero = Fraction(0)

    def as_entry(value: TableEntry) -> TableEntry:
        if degenerate and isinstance(value, Fraction):
            return MultiPoly.const(value)
        return value

    columns: list[list[TableEntry]] = []
    power = TruncatedSeries.one(max_n)
    k_factorial = 1
    for k in range(max_n + 1):
        if k > 0:
            power = power * base
            k_factorial *= k
        columns.append(
            [
                as_entry(math.factorial(n) * power.coeffs[n] / k_factorial)
                for n in range(max_n + 1)
            ]
        )
    rows = tuple(
        tuple(columns[k][n] if k <= n else zero for k in range(n + 1))
        for n in range(max_n + 1)
    )
    return StirlingTable(kind=kind, degenerate=degenerate, max_n=max_n, entries=rows)


# -- derangements ------------------------------------------------------------


@dataclass(frozen=True)
class DerangementSeq:
    """Derangement numbers d_0..d_N from d_n = n*d_(n-1) + (-1)^n."""

    values: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


def derangements(max_n: int) -> DerangementSeq:
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    values = [1]
    for n in range(1, max_n + 1):
        values.append(n * values[-1] + (-1) ** n)
    return DerangementSeq(values=tuple(values))


def derangement_egf(order: int) -> TruncatedSeries:
    """exp(-t) / (1 - t); its EGF terms must match the recurrence values."""
    exp_neg = TruncatedSeries(
        [Fraction((-1) ** n, math.factorial(n)) for n in range(order + 1)]
    )
    return exp_neg * geometric(order)
