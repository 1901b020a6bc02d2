"""Exact coefficient arithmetic: rationals and sparse polynomials in lam, x.

Scalars are ``fractions.Fraction`` (arbitrary precision, always reduced,
positive denominator, zero is 0/1).  A :class:`MultiPoly` is an element of
the commutative ring Q[lam, x], stored as a finite map

    (lam_exp, x_exp)  ->  nonzero Fraction

The zero polynomial stores no terms.  Every operation normalizes (drops zero
coefficients), so structural equality is mathematical equality.  Terms
iterate and render in graded-lexicographic order (total degree first, then
lam exponent, then x exponent, descending), which makes the text form
deterministic and usable in snapshot tests.

Values are immutable; all operations return fresh polynomials.  Arithmetic
accepts plain ints and Fractions on either side, so mixed expressions like
``2 * p - Fraction(1, 3)`` work as expected.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping, Union

Monomial = tuple[int, int]
Scalar = Union[int, Fraction]


def as_fraction(value: Scalar | str) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to an exact Fraction."""
    if isinstance(value, (Fraction, int)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def _grlex_key(mono: Monomial) -> tuple[int, int, int]:
    return (mono[0] + mono[1], mono[0], mono[1])


class MultiPoly:
    """Sparse polynomial in the indeterminates ``lam`` and ``x`` over Q."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                e_lam, e_x = mono
                if e_lam < 0 or e_x < 0:
                    raise ValueError(f"negative exponent in monomial {mono}")
                c = as_fraction(coeff)
                if c:
                    clean[(e_lam, e_x)] = c
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls()

    @classmethod
    def one(cls) -> "MultiPoly":
        return cls({(0, 0): 1})

    @classmethod
    def const(cls, value: Scalar) -> "MultiPoly":
        return cls({(0, 0): value})

    @classmethod
    def lam(cls) -> "MultiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def x(cls) -> "MultiPoly":
        return cls({(0, 1): 1})

    @classmethod
    def monomial(cls, e_lam: int, e_x: int, coeff: Scalar = 1) -> "MultiPoly":
        return cls({(e_lam, e_x): coeff})

    # -- inspection --------------------------------------------------------

    def terms(self) -> tuple[tuple[Monomial, Fraction], ...]:
        """Terms in descending graded-lex order."""
        return tuple(
            sorted(self._terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)
        )

    def coefficient(self, e_lam: int, e_x: int) -> Fraction:
        return self._terms.get((e_lam, e_x), Fraction(0))

    def coeff_of_x(self, e_x: int) -> "MultiPoly":
        """The polynomial in lam multiplying x**e_x."""
        picked = {
            (e_lam, 0): c for (e_lam, e), c in self._terms.items() if e == e_x
        }
        return MultiPoly(picked)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(mono == (0, 0) for mono in self._terms)

    def constant(self) -> Fraction:
        """The value of a constant polynomial; raises if indeterminates remain."""
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self}")
        return self._terms.get((0, 0), Fraction(0))

    @property
    def lam_degree(self) -> int:
        return max((m[0] for m in self._terms), default=0)

    @property
    def x_degree(self) -> int:
        return max((m[1] for m in self._terms), default=0)

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(other: object) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(other)
        return None

    def __add__(self, other: object) -> "MultiPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._terms)
        for mono, coeff in rhs._terms.items():
            new = out.get(mono, Fraction(0)) + coeff
            if new:
                out[mono] = new
            else:
                out.pop(mono, None)
        result = MultiPoly.__new__(MultiPoly)
        result._terms = out
        return result

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        result = MultiPoly.__new__(MultiPoly)
        result._terms = {mono: -coeff for mono, coeff in self._terms.items()}
        return result

    def __sub__(self, other: object) -> "MultiPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "MultiPoly":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs + (-self)

    def __mul__(self, other: object) -> "MultiPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for (a_lam, a_x), a_c in self._terms.items():
            for (b_lam, b_x), b_c in rhs._terms.items():
                mono = (a_lam + b_lam, a_x + b_x)
                new = out.get(mono, Fraction(0)) + a_c * b_c
                if new:
                    out[mono] = new
                else:
                    out.pop(mono, None)
        result = MultiPoly.__new__(MultiPoly)
        result._terms = out
        return result

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "MultiPoly":
        """Division by an invertible constant (nonzero rational)."""
        if isinstance(other, MultiPoly):
            other = other.constant()
        if isinstance(other, (int, Fraction)):
            divisor = as_fraction(other)
            if not divisor:
                raise ZeroDivisionError("division of polynomial by zero")
            return self * (1 / divisor)
        return NotImplemented

    def __pow__(self, exponent: int) -> "MultiPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = MultiPoly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- substitution ------------------------------------------------------

    def subs(
        self,
        lam: Scalar | None = None,
        x: Scalar | None = None,
    ) -> "MultiPoly":
        """Substitute exact values for lam and/or x, leaving others symbolic.

        Substituting both indeterminates yields a constant polynomial;
        substituting none returns the polynomial unchanged.
        """
        if lam is None and x is None:
            return self
        lam_val = None if lam is None else as_fraction(lam)
        x_val = None if x is None else as_fraction(x)
        out: dict[Monomial, Fraction] = {}
        for (e_lam, e_x), coeff in self._terms.items():
            c = coeff
            if lam_val is not None:
                c *= lam_val**e_lam
                e_lam = 0
            if x_val is not None:
                c *= x_val**e_x
                e_x = 0
            if c:
                mono = (e_lam, e_x)
                new = out.get(mono, Fraction(0)) + c
                if new:
                    out[mono] = new
                else:
                    out.pop(mono, None)
        result = MultiPoly.__new__(MultiPoly)
        result._terms = out
        return result

    # -- comparison / hashing / rendering ----------------------------------

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self.terms())

    @staticmethod
    def _format_term(mono: Monomial, coeff: Fraction) -> str:
        e_lam, e_x = mono
        parts = []
        if e_lam:
            parts.append("lam" if e_lam == 1 else f"lam^{e_lam}")
        if e_x:
            parts.append("x" if e_x == 1 else f"x^{e_x}")
        if not parts:
            return str(coeff)
        body = "*".join(parts)
        if coeff == 1:
            return body
        if coeff == -1:
            return f"-{body}"
        return f"{coeff}*{body}"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        rendered = [self._format_term(m, c) for m, c in self.terms()]
        text = rendered[0]
        for piece in rendered[1:]:
            if piece.startswith("-"):
                text += f" - {piece[1:]}"
            else:
                text += f" + {piece}"
        return text

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


LAM = MultiPoly.lam()
X = MultiPoly.x()


def falling_factorial(n: int, x: Scalar | None = None) -> MultiPoly:
    """The step-lam falling factorial x (x - lam) ... (x - (n-1) lam).

    With ``x=None`` the first factor stays symbolic; a supplied rational
    specializes it, leaving a polynomial in lam alone.  n = 0 gives 1.
    """
    if n < 0:
        raise ValueError("falling factorial needs n >= 0")
    start = X if x is None else MultiPoly.const(x)
    result = MultiPoly.one()
    for j in range(n):
        result = result * (start - LAM * j)
    return result
