"""Truncated formal power series in t over exact coefficients.

A series of order N holds the ordinary coefficients c_0 .. c_N and is
understood modulo t^(N+1).  Coefficients are Fractions or
:class:`~polybell.ring.MultiPoly` values and mix freely within one
expression; ints are coerced to Fractions on construction.  Sequence values
in exponential-generating-function form are recovered through
:meth:`TruncatedSeries.egf_term`, which returns n! * c_n exactly.

Binary operations between series of different orders truncate to the
smaller order, mirroring arithmetic modulo t^(N+1).  Composition uses a
Horner scheme and requires the inner series to have zero constant term.
Compositional inversion (:meth:`revert`) runs Newton iteration with order
doubling; classical Lagrange inversion (:meth:`revert_lagrange`) is kept as
an independent slow path for cross-checking and benchmarks.

All values are immutable and all operations are pure.  The only module
state is an optional coefficient-multiplication counter used by the
benchmark command; see :func:`count_coeff_mults`.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from fractions import Fraction
from typing import Iterable, Iterator, Union

from .ring import MultiPoly, Scalar

Coeff = Union[Fraction, MultiPoly]


class _MultCounter:
    __slots__ = ("mults",)

    def __init__(self) -> None:
        self.mults = 0


_ACTIVE_COUNTER: _MultCounter | None = None


@contextmanager
def count_coeff_mults() -> Iterator[_MultCounter]:
    """Count executed coefficient multiplications inside the block.

    Benchmark instrumentation only; nesting is not supported.
    """
    global _ACTIVE_COUNTER
    counter = _MultCounter()
    _ACTIVE_COUNTER = counter
    try:
        yield counter
    finally:
        _ACTIVE_COUNTER = None


def _tick() -> None:
    if _ACTIVE_COUNTER is not None:
        _ACTIVE_COUNTER.mults += 1


def _norm_coeff(value: Coeff | int) -> Coeff:
    if isinstance(value, MultiPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    raise TypeError(f"unsupported series coefficient {value!r}")


def _is_zero(value: Coeff) -> bool:
    if isinstance(value, MultiPoly):
        return value.is_zero()
    return not value


def _invert(value: Coeff) -> Coeff:
    """Multiplicative inverse of an invertible coefficient.

    Fractions must be nonzero; polynomials must be nonzero constants.
    """
    if isinstance(value, MultiPoly):
        c = value.constant()
        if not c:
            raise ZeroDivisionError("coefficient is not invertible")
        return MultiPoly.const(1 / c)
    if not value:
        raise ZeroDivisionError("coefficient is not invertible")
    return 1 / value


class TruncatedSeries:
    """Formal power series known modulo t^(order+1)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coeff | int], order: int | None = None):
        values = [_norm_coeff(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("series order must be >= 0")
            if len(values) > order + 1:
                values = values[: order + 1]
            else:
                values.extend(Fraction(0) for _ in range(order + 1 - len(values)))
        elif not values:
            raise ValueError("need coefficients or an explicit order")
        self.coeffs = tuple(values)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([], order=order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order=order)

    def coefficient(self, n: int) -> Coeff:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def egf_term(self, n: int) -> Coeff:
        """The n-th exponential-generating-function term, n! * c_n."""
        return math.factorial(n) * self.coefficient(n)

    def egf_terms(self) -> tuple[Coeff, ...]:
        return tuple(math.factorial(n) * c for n, c in enumerate(self.coeffs))

    # -- truncation --------------------------------------------------------

    def truncate(self, order: int) -> "TruncatedSeries":
        """Restrict to a smaller (or equal) order."""
        if order > self.order:
            raise ValueError(f"cannot truncate order {self.order} up to {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    def pad(self, order: int) -> "TruncatedSeries":
        """Extend with zero coefficients up to ``order``.

        This asserts knowledge the series may not have; it is exact for
        polynomials and for Newton-iteration internals, the only callers.
        """
        if order < self.order:
            raise ValueError("pad target below current order")
        return TruncatedSeries(self.coeffs, order=order)

    # -- linear arithmetic ---------------------------------------------------

    def __add__(self, other: object) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)]
        )

    def __sub__(self, other: object) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[i] - other.coeffs[i] for i in range(n + 1)]
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs])

    def scale(self, factor: Coeff | int) -> "TruncatedSeries":
        """Multiply every coefficient by a fixed ring element."""
        f = _norm_coeff(factor)
        return TruncatedSeries([f * c for c in self.coeffs])

    def _add_constant(self, value: Coeff) -> "TruncatedSeries":
        head = self.coeffs[0] + value
        return TruncatedSeries((head,) + self.coeffs[1:])

    # -- multiplicative structure -------------------------------------------

    def __mul__(self, other: object) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        out: list[Coeff] = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if _is_zero(a):
                continue
            for j in range(n - i + 1):
                b = other.coeffs[j]
                if _is_zero(b):
                    continue
                out[i + j] = out[i + j] + a * b
                _tick()
        return TruncatedSeries(out)

    def reciprocal(self) -> "TruncatedSeries":
        """The series 1/f; requires an invertible constant term."""
        inv0 = _invert(self.coeffs[0])
        out: list[Coeff] = [inv0]
        for n in range(1, self.order + 1):
            acc: Coeff = Fraction(0)
            for i in range(1, n + 1):
                c = self.coeffs[i]
                if _is_zero(c):
                    continue
                acc = acc + c * out[n - i]
                _tick()
            out.append(-(inv0 * acc))
            _tick()
        return TruncatedSeries(out)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """Substitute ``inner`` for t; inner must have zero constant term."""
        if not _is_zero(inner.coeffs[0]):
            raise ValueError("composition needs an inner series with zero constant term")
        n = min(self.order, inner.order)
        g = inner.truncate(n)
        result = TruncatedSeries([self.coeffs[n]], order=n)
        for i in range(n - 1, -1, -1):
            result = (result * g)._add_constant(self.coeffs[i])
        return result

    def derivative(self) -> "TruncatedSeries":
        """Termwise d/dt; drops the order by one."""
        if self.order < 1:
            raise ValueError("derivative needs order >= 1")
        return TruncatedSeries(
            [(i + 1) * self.coeffs[i + 1] for i in range(self.order)]
        )

    # -- compositional inversion ---------------------------------------------

    def _check_revertible(self) -> Coeff:
        if self.order < 1:
            raise ValueError("reversion needs order >= 1")
        if not _is_zero(self.coeffs[0]):
            raise ValueError("reversion needs a zero constant term")
        return _invert(self.coeffs[1])

    def revert(self) -> "TruncatedSeries":
        """Compositional inverse g with f(g(t)) = g(f(t)) = t mod t^(N+1).

        Newton iteration with order doubling: each step refines g by
        g <- g - (f o g - t) / (f' o g), doubling the number of correct
        coefficients.
        """
        inv1 = self._check_revertible()
        n = self.order
        g = TruncatedSeries([Fraction(0), inv1])
        if n == 1:
            return g
        fprime = self.derivative()
        m = 1
        while m < n:
            m = min(2 * m, n)
            g = g.pad(m)
            error = self.truncate(m).compose(g) - t_identity(m)
            slope = fprime.truncate(m - 1).compose(g.truncate(m - 1))
            correction = error * slope.reciprocal().pad(m)
            g = g - correction
        return g

    def revert_lagrange(self) -> "TruncatedSeries":
        """Compositional inverse via the coefficient formula

            n * [t^n] g = [t^(n-1)] (t / f)^n,

        evaluated with explicit series powers.  Quadratically slower than
        :meth:`revert`; kept as an independent cross-check and benchmark
        baseline.
        """
        self._check_revertible()
        n = self.order
        # h = f / t, an invertible series of order n - 1.
        h = TruncatedSeries(self.coeffs[1:])
        hinv = h.reciprocal()
        out: list[Coeff] = [Fraction(0)] * (n + 1)
        power = TruncatedSeries.one(n - 1)
        for m in range(1, n + 1):
            power = power * hinv
            coeff = power.coeffs[m - 1]
            out[m] = coeff / m if isinstance(coeff, MultiPoly) else coeff / Fraction(m)
        return TruncatedSeries(out)

    # -- comparison / rendering ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if self.order != other.order:
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        inside = ", ".join(str(c) for c in self.coeffs)
        return f"TruncatedSeries(order={self.order}, [{inside}])"


def t_identity(order: int) -> TruncatedSeries:
    """The series t."""
    if order < 1:
        raise ValueError("the identity series needs order >= 1")
    return TruncatedSeries([0, 1], order=order)
