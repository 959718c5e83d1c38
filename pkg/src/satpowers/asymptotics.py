"""Limits of integer sequences f(n)/n^d, multiplicities and diagonal Hilbert functions.

Everything stays in exact rationals. Convergence is judged from exact
differences between extrapolants, never from a floating tolerance.
"""

from __future__ import annotations

import decimal
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Sequence

from satpowers.monomial import (
    MonomialIdeal,
    count_graded_piece,
    graded_counts,
    power,
    powers,
    saturate_irrelevant,
    top_disagreement_degree,
)
from satpowers.numeric import fraction_str

__all__ = [
    "AsymptoticEstimate",
    "NotStabilizedError",
    "colength",
    "diagonal_hilbert",
    "finite_difference_leading",
    "multiplicity_mprimary",
    "richardson_limit",
]


class NotStabilizedError(RuntimeError):
    """The d-th differences of a sequence were not constant on the window."""


@dataclass(frozen=True)
class AsymptoticEstimate:
    degree: int
    raw: list[tuple[int, Fraction]]
    extrapolated: Fraction
    error_indicator: Fraction
    order: int = 1
    chain: tuple[int, ...] = field(default=())

    def to_json(self, digits: int | None = 20) -> dict:
        out = {
            "degree": self.degree,
            "order": self.order,
            "chain": list(self.chain),
            "raw": [{"n": n, "ratio": fraction_str(r)} for n, r in self.raw],
            "extrapolated": fraction_str(self.extrapolated),
            "error_indicator": fraction_str(self.error_indicator),
        }
        if digits is not None:
            out["extrapolated_decimal"] = decimal_str(self.extrapolated, digits)
        return out


def decimal_str(x: Fraction, digits: int = 20) -> str:
    ctx = decimal.Context(prec=digits)
    return str(ctx.divide(decimal.Decimal(x.numerator), decimal.Decimal(x.denominator)))


def _richardson_chain(ratio: dict[int, Fraction], n0: int, order: int) -> Fraction:
    col = [ratio[n0 << j] for j in range(order + 1)]
    for k in range(1, order + 1):
        w = 1 << k
        col = [(w * col[j] - col[j - 1]) / (w - 1) for j in range(1, len(col))]
    return col[0]


def richardson_limit(f: Sequence[int], d: int, order: int = 1) -> AsymptoticEstimate:
    """Extrapolate lim f(n)/n^d from the values ``f[0] = f(1), ..., f[N-1] = f(N)``.

    With ``order=1`` the estimate is 2*r(2n) - r(n) for r(n) = f(n)/n^d at the
    largest pair (n, 2n) inside the data. Higher orders repeat the elimination
    along n, 2n, 4n, ... and are exact once f is a polynomial of degree d and
    ``order >= d``. The error indicator is the gap to the same estimate started
    one step lower.
    """
    if d < 1:
        raise ValueError(f"degree must be positive, got {d}")
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    n_total = len(f)
    if n_total < 4:
        raise ValueError(f"need at least 4 terms, got {n_total}")
    if n_total < 1 << (order + 1):
        raise ValueError(f"order {order} needs at least {1 << (order + 1)} terms, got {n_total}")
    ratio = {n: Fraction(f[n - 1], n**d) for n in range(1, n_total + 1)}
    n0 = n_total >> order
    best = _richardson_chain(ratio, n0, order)
    prev = _richardson_chain(ratio, n0 - 1, order)
    return AsymptoticEstimate(
        degree=d,
        raw=sorted(ratio.items()),
        extrapolated=best,
        error_indicator=abs(best - prev),
        order=order,
        chain=tuple(n0 << j for j in range(order + 1)),
    )


def finite_difference_leading(f: Sequence[int], d: int) -> Fraction | None:
    """Leading coefficient of f if its d-th differences are constant at the tail, else None.

    The tail window is the last max(3, N // 4) differences.
    """
    vals = [Fraction(x) for x in f]
    for _ in range(d):
        vals = [b - a for a, b in zip(vals, vals[1:])]
    window = max(3, len(f) // 4)
    if len(vals) < window:
        return None
    tail = vals[-window:]
    if any(v != tail[0] for v in tail):
        return None
    return tail[0] / factorial(d)


def colength(i: MonomialIdeal, strategy: str = "pivot") -> int:
    """Length of R/I for an m-primary monomial ideal I."""
    unit = MonomialIdeal.unit(i.d)
    top = top_disagreement_degree(i, unit, strategy)
    counts = graded_counts(i, top, strategy)
    return sum(graded_counts(unit, top, strategy)) - sum(counts)


def _is_mprimary(i: MonomialIdeal) -> bool:
    return not i.is_zero() and saturate_irrelevant(i).is_unit()


def multiplicity_mprimary(i: MonomialIdeal, n_max: int, strategy: str = "pivot") -> Fraction:
    """Multiplicity e(I): d! times the leading coefficient of n -> length(R/I^n)."""
    if not _is_mprimary(i):
        raise ValueError("multiplicity_mprimary needs an m-primary ideal (its saturation must be the unit ideal)")
    seq = [colength(p, strategy) for p in powers(i, n_max)]
    lead = finite_difference_leading(seq, i.d)
    if lead is None:
        raise NotStabilizedError(f"length(R/I^n) not yet polynomial of degree {i.d} within n <= {n_max}")
    return lead * factorial(i.d)


def diagonal_hilbert(i: MonomialIdeal, a: int, b: int, n: int, strategy: str = "pivot") -> int:
    """dim_k (I^(b n))_(a n): the n-th graded piece of the (a, b) diagonal of the Rees algebra."""
    if a < 1 or b < 1:
        raise ValueError(f"diagonal (a, b) must be positive, got ({a}, {b})")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if a < b * i.max_degree():
        warnings.warn(
            f"a = {a} is below b * (top generator degree) = {b * i.max_degree()}; "
            "the diagonal algebra may not be generated in degree 1",
            stacklevel=2,
        )
    if n == 0:
        return 1
    return count_graded_piece(power(i, b * n), a * n, strategy)
