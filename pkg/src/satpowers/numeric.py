"""Exact integer helpers and arithmetic in a real quadratic field Q(sqrt(D)).

Rationals are plain :class:`fractions.Fraction` values; nothing in this module
ever rounds. The decimal rendering of a :class:`QuadraticNumber` is for display
and is never fed back into a computation.
"""

from __future__ import annotations

import decimal
import math
from fractions import Fraction
from typing import Union

__all__ = [
    "QuadraticNumber",
    "binomial",
    "fraction_str",
    "is_square",
    "isqrt",
    "parse_fraction",
    "quad_compare",
]

Rational = Union[int, Fraction]


def isqrt(n: int) -> int:
    """Floor of the square root of a nonnegative integer, computed exactly."""
    if n < 0:
        raise ValueError(f"isqrt of a negative number: {n}")
    r = math.isqrt(n)
    assert r * r <= n < (r + 1) * (r + 1)
    return r


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with ``binomial(n, k) == 0`` whenever ``n < k``.

    Negative ``n`` also gives 0, which is the convention for the dimension of
    degree-``n`` forms when the degree is negative.
    """
    if k < 0:
        raise ValueError(f"binomial: k must be nonnegative, got {k}")
    if n < k:
        return 0
    return math.comb(n, k)


def fraction_str(x: Rational) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def _sign(x: Rational) -> int:
    return (x > 0) - (x < 0)


class QuadraticNumber:
    """An element ``p + q*sqrt(D)`` with rational ``p``, ``q`` and non-square ``D``.

    ``D`` only has to be a positive non-square; it is not reduced. Two numbers
    can only be combined when they share the same ``D``.
    """

    __slots__ = ("_p", "_q", "_d")

    def __init__(self, p: Rational, q: Rational, D: int) -> None:
        if not isinstance(D, int) or D <= 0 or is_square(D):
            raise ValueError(f"radicand must be a positive non-square integer, got {D!r}")
        self._p = Fraction(p)
        self._q = Fraction(q)
        self._d = D

    @property
    def p(self) -> Fraction:
        return self._p

    @property
    def q(self) -> Fraction:
        return self._q

    @property
    def D(self) -> int:
        return self._d

    @classmethod
    def sqrt(cls, D: int) -> QuadraticNumber:
        return cls(0, 1, D)

    def is_rational(self) -> bool:
        return self._q == 0

    def conjugate(self) -> QuadraticNumber:
        return QuadraticNumber(self._p, -self._q, self._d)

    def _coerce(self, other: object) -> QuadraticNumber | None:
        if isinstance(other, QuadraticNumber):
            if other._d != self._d:
                raise ValueError(f"mismatched radicands {self._d} and {other._d}")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber(other, 0, self._d)
        return None

    def __add__(self, other: object) -> QuadraticNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticNumber(self._p + o._p, self._q + o._q, self._d)

    __radd__ = __add__

    def __neg__(self) -> QuadraticNumber:
        return QuadraticNumber(-self._p, -self._q, self._d)

    def __sub__(self, other: object) -> QuadraticNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticNumber(self._p - o._p, self._q - o._q, self._d)

    def __rsub__(self, other: object) -> QuadraticNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> QuadraticNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self._p * o._p + self._q * o._q * self._d
        q = self._p * o._q + self._q * o._p
        return QuadraticNumber(p, q, self._d)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QuadraticNumber:
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = QuadraticNumber(1, 0, self._d)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadraticNumber):
            return (self._p, self._q, self._d) == (other._p, other._q, other._d)
        if isinstance(other, (int, Fraction)):
            return self._q == 0 and self._p == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._p, self._q, self._d))

    def __lt__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return quad_compare(self, o) < 0

    def __le__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return quad_compare(self, o) <= 0

    def __gt__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return quad_compare(self, o) > 0

    def __ge__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return quad_compare(self, o) >= 0

    def sign(self) -> int:
        """Exact sign of the real number, without any floating point."""
        sp, sq = _sign(self._p), _sign(self._q)
        if sq == 0:
            return sp
        if sp == 0 or sp == sq:
            return sq
        # opposite signs: the larger of |p| and |q|*sqrt(D) wins; they cannot tie
        if self._p * self._p > self._q * self._q * self._d:
            return sp
        return sq

    def to_decimal(self, digits: int = 30) -> decimal.Decimal:
        """Decimal approximation with ``digits`` significant digits (display only)."""
        ctx = decimal.Context(prec=digits + 10)
        root = ctx.sqrt(decimal.Decimal(self._d))
        p = ctx.divide(decimal.Decimal(self._p.numerator), decimal.Decimal(self._p.denominator))
        q = ctx.divide(decimal.Decimal(self._q.numerator), decimal.Decimal(self._q.denominator))
        value = ctx.add(p, ctx.multiply(q, root))
        return decimal.Context(prec=digits).plus(value)

    def __float__(self) -> float:
        return float(self.to_decimal(20))

    def to_json(self) -> dict:
        return {"p": fraction_str(self._p), "q": fraction_str(self._q), "D": self._d}

    @classmethod
    def from_json(cls, obj: dict) -> QuadraticNumber:
        return cls(parse_fraction(obj["p"]), parse_fraction(obj["q"]), int(obj["D"]))

    def __repr__(self) -> str:
        return f"QuadraticNumber({self._p!s}, {self._q!s}, {self._d})"

    def __str__(self) -> str:
        if self._q == 0:
            return str(self._p)
        q = "" if abs(self._q) == 1 else f"{abs(self._q)}*"
        op = "+" if self._q > 0 else "-"
        return f"{self._p} {op} {q}sqrt({self._d})"


def quad_compare(x: QuadraticNumber, y: QuadraticNumber) -> int:
    """Return -1, 0 or 1 as ``x`` is less than, equal to or greater than ``y``."""
    if x.D != y.D:
        raise ValueError(f"mismatched radicands {x.D} and {y.D}")
    return QuadraticNumber(x.p - y.p, x.q - y.q, x.D).sign()
