"""Bell-type polynomial families, each with two independent computation paths.

Every family is a sequence of polynomials with an explicit Stirling-type
coefficient sum and a generating function whose EGF terms must agree with
that sum exactly:

  classical_bell   Bel_n(x)          sum_k S2(n,k) x^k
                   GF exp(x*(exp(t)-1))
  deg_bell         Bel_{n,lam}(x)    sum_k S2_lam(n,k) * (x)_{k,lam}
                   GF e_lam^x(e_lam(t)-1)
  bell2            bel_n(x)          sum_k (-1)^(k-1) (k-1)! S1(n,k) x^k
                   GF log(1 + x*log(1+t))
  deg_bell2        bel_{n,lam}(x)    sum_k prod_{j<k}(lam-j) S1_lam(n,k) x^k
                   GF log_lam(1 + x*log_lam(1+t))
  poly_bell2       bel_n^(k)(x)      sum_l x^l/l^(k-1) (l-1)! |S1(n,l)|
                   GF Li_k(-x*log(1-t))
  deg_poly_bell2   bel_{n,lam}^(k)   (-1)^(n-1) sum_l ... S1_lam(n,l)
                   GF Li_{k,lam}(-x*log_lam(1-t))

The sum path is the default for values; the generating-function path backs
the dual-route checks in the verifier and tests.  Second-kind families
(everything except classical_bell/deg_bell) start at n = 1 and reject n = 0
outright so index errors surface instead of silently producing zeros.

x stays symbolic throughout; numeric x is an evaluation at the boundary,
never a separate code path.  Likewise lam stays symbolic in the degenerate
families, making the lam=0 and lam=1 collapses exact polynomial checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .ring import MultiPoly, falling_factorial
from .series import TruncatedSeries
from .special import (
    KIND_FIRST,
    KIND_SECOND,
    deg_exp,
    deg_exp_minus_one,
    deg_log_coeff,
    deg_log1p,
    deg_polylog,
    exp_minus_one,
    exp_series,
    inverse_power,
    log1p,
    polylog,
    stirling_table,
)

FAMILIES = (
    "classical_bell",
    "deg_bell",
    "bell2",
    "deg_bell2",
    "poly_bell2",
    "deg_poly_bell2",
)
POLY_FAMILIES = frozenset({"poly_bell2", "deg_poly_bell2"})
DEGENERATE_FAMILIES = frozenset({"deg_bell", "deg_bell2", "deg_poly_bell2"})
# Families whose index starts at n = 1; the two plain Bell families keep n = 0.
SECOND_KIND_FAMILIES = frozenset(FAMILIES) - {"classical_bell", "deg_bell"}


@dataclass(frozen=True)
class BellFamilyId:
    """A family name plus, for the poly families, the polylogarithm index."""

    family: str
    poly_index: int | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family in POLY_FAMILIES:
            if self.poly_index is None:
                raise ValueError(f"family {self.family!r} needs a poly index")
        elif self.poly_index is not None:
            raise ValueError(f"family {self.family!r} takes no poly index")

    def label(self) -> str:
        if self.poly_index is None:
            return self.family
        return f"{self.family}[k={self.poly_index}]"


@dataclass(frozen=True)
class BellValue:
    """One member of a family: the polynomial for index n."""

    family: BellFamilyId
    n: int
    value: MultiPoly

    def number(self) -> MultiPoly:
        """The numbers variant: the polynomial evaluated at x = 1."""
        return self.value.subs(x=1)


# -- closed-form coefficient sums -------------------------------------------


def _require_index(family: str, n: int) -> None:
    if family in SECOND_KIND_FAMILIES:
        if n < 1:
            raise ValueError(f"{family} starts at n = 1; got n = {n}")
    elif n < 0:
        raise ValueError(f"{family} needs n >= 0; got n = {n}")


def _bell_sum(n: int) -> MultiPoly:
    s2 = stirling_table(KIND_SECOND, False, n)
    acc = MultiPoly.zero()
    for k in range(n + 1):
        acc = acc + MultiPoly.monomial(0, k, s2.value(n, k))
    return acc


def _deg_bell_sum(n: int) -> MultiPoly:
    s2 = stirling_table(KIND_SECOND, True, n)
    acc = MultiPoly.zero()
    for k in range(n + 1):
        acc = acc + s2.value(n, k) * falling_factorial(k)
    return acc


def _bell2_sum(n: int) -> MultiPoly:
    s1 = stirling_table(KIND_FIRST, False, n)
    acc = MultiPoly.zero()
    for k in range(1, n + 1):
        weight = Fraction((-1) ** (k - 1) * math.factorial(k - 1)) * s1.value(n, k)
        acc = acc + MultiPoly.monomial(0, k, weight)
    return acc


def _deg_bell2_sum(n: int) -> MultiPoly:
    s1 = stirling_table(KIND_FIRST, True, n)
    acc = MultiPoly.zero()
    for k in range(1, n + 1):
        acc = acc + deg_log_coeff(k) * s1.value(n, k) * MultiPoly.monomial(0, k)
    return acc


def _poly_bell2_sum(n: int, k: int) -> MultiPoly:
    s1 = stirling_table(KIND_FIRST, False, n)
    acc = MultiPoly.zero()
    for l in range(1, n + 1):
        weight = (
            inverse_power(l, k - 1) * math.factorial(l - 1) * s1.unsigned(n, l)
        )
        acc = acc + MultiPoly.monomial(0, l, weight)
    return acc


def _deg_poly_bell2_sum(n: int, k: int) -> MultiPoly:
    s1 = stirling_table(KIND_FIRST, True, n)
    acc = MultiPoly.zero()
    for l in range(1, n + 1):
        term = deg_log_coeff(l) * s1.value(n, l) * MultiPoly.monomial(0, l)
        acc = acc + inverse_power(l, k - 1) * term
    return (-1) ** (n - 1) * acc


def stirling_sum_value(fam: BellFamilyId, n: int) -> MultiPoly:
    """Closed-form path: the family polynomial as a weighted Stirling sum."""
    _require_index(fam.family, n)
    if fam.family == "classical_bell":
        return _bell_sum(n)
    if fam.family == "deg_bell":
        return _deg_bell_sum(n)
    if fam.family == "bell2":
        return _bell2_sum(n)
    if fam.family == "deg_bell2":
        return _deg_bell2_sum(n)
    if fam.family == "poly_bell2":
        return _poly_bell2_sum(n, fam.poly_index)
    return _deg_poly_bell2_sum(n, fam.poly_index)


def family_value(fam: BellFamilyId, n: int) -> BellValue:
    return BellValue(family=fam, n=n, value=stirling_sum_value(fam, n))


# -- generating functions ----------------------------------------------------

_X = MultiPoly.x()


def gf_bell_numbers(order: int) -> TruncatedSeries:
    """exp(exp(t) - 1) - 1: EGF terms are the Bell numbers, n >= 1."""
    return exp_minus_one(order).compose(exp_minus_one(order))


def gf_bell_polys(order: int) -> TruncatedSeries:
    """exp(x*(exp(t) - 1)) with symbolic x."""
    return exp_series(order).compose(exp_minus_one(order).scale(_X))


def gf_bell2_numbers(order: int) -> TruncatedSeries:
    """log(1 + log(1 + t)): the compositional inverse of gf_bell_numbers."""
    return log1p(order).compose(log1p(order))


def gf_bell2_polys(order: int) -> TruncatedSeries:
    """log(1 + x*log(1 + t)) with symbolic x."""
    return log1p(order).compose(log1p(order).scale(_X))


def gf_deg_bell_numbers(order: int) -> TruncatedSeries:
    """e_lam(e_lam(t) - 1) - 1."""
    return deg_exp_minus_one(order).compose(deg_exp_minus_one(order))


def gf_deg_bell_polys(order: int) -> TruncatedSeries:
    """e_lam^x(e_lam(t) - 1) with symbolic x."""
    return deg_exp(order).compose(deg_exp_minus_one(order))


def gf_deg_bell2_numbers(order: int) -> TruncatedSeries:
    """log_lam(1 + log_lam(1 + t))."""
    return deg_log1p(order).compose(deg_log1p(order))


def gf_deg_bell2_polys(order: int) -> TruncatedSeries:
    """log_lam(1 + x*log_lam(1 + t)) with symbolic x."""
    return deg_log1p(order).compose(deg_log1p(order).scale(_X))


def gf_poly_bell2(k: int, order: int) -> TruncatedSeries:
    """Li_k(-x*log(1 - t)); the inner factor is x times the index-1 series."""
    return polylog(k, order).compose(polylog(1, order).scale(_X))


def gf_deg_poly_bell2(k: int, order: int) -> TruncatedSeries:
    """Li_{k,lam}(-x*log_lam(1 - t))."""
    return deg_polylog(k, order).compose(deg_polylog(1, order).scale(_X))


def gf_for_family(fam: BellFamilyId, order: int) -> TruncatedSeries:
    """The symbolic-x generating function whose EGF terms are the family."""
    if fam.family == "classical_bell":
        return gf_bell_polys(order)
    if fam.family == "deg_bell":
        return gf_deg_bell_polys(order)
    if fam.family == "bell2":
        return gf_bell2_polys(order)
    if fam.family == "deg_bell2":
        return gf_deg_bell2_polys(order)
    if fam.family == "poly_bell2":
        return gf_poly_bell2(fam.poly_index, order)
    return gf_deg_poly_bell2(fam.poly_index, order)


def egf_value(fam: BellFamilyId, n: int) -> MultiPoly:
    """Generating-function path: n! * [t^n] of the family's GF."""
    _require_index(fam.family, n)
    term = gf_for_family(fam, max(n, 1)).egf_term(n)
    if isinstance(term, MultiPoly):
        return term
    return MultiPoly.const(term)


# -- convenience wrappers ----------------------------------------------------


def bell_poly(n: int) -> BellValue:
    """Classical Bell polynomial; counts set partitions by block count."""
    return family_value(BellFamilyId("classical_bell"), n)


def deg_bell_poly(n: int) -> BellValue:
    return family_value(BellFamilyId("deg_bell"), n)


def bell2_poly(n: int) -> BellValue:
    """Second-kind Bell polynomial, from the inverse-pair logarithm GF."""
    return family_value(BellFamilyId("bell2"), n)


def bell2_number(n: int) -> BellValue:
    """Second-kind Bell number: the n-th polynomial evaluated at x = 1."""
    base = bell2_poly(n)
    return BellValue(family=base.family, n=n, value=base.number())


def deg_bell2_poly(n: int) -> BellValue:
    return family_value(BellFamilyId("deg_bell2"), n)


def poly_bell2(n: int, k: int) -> BellValue:
    return family_value(BellFamilyId("poly_bell2", k), n)


def deg_poly_bell2(n: int, k: int) -> BellValue:
    return family_value(BellFamilyId("deg_poly_bell2", k), n)
