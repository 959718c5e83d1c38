"""Lengths of H^0_m(R/I^n) for powers of a monomial ideal.

For a monomial ideal the module of sections of I^n away from the irrelevant
ideal is the saturation sat(I^n), so the length of H^0_m(R/I^n) is the number
of monomials in sat(I^n) but not in I^n. It splits as sigma(n) - tau(n), with
both sums truncated at degree e*n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from satpowers.monomial import (
    MonomialIdeal,
    graded_counts,
    powers,
    saturate_irrelevant,
    top_disagreement_degree,
)

__all__ = [
    "LengthRecord",
    "empirical_swanson_e",
    "h0_length",
    "length_table",
    "sigma",
    "sigma_tau",
    "tau",
]


@dataclass(frozen=True)
class LengthRecord:
    n: int
    lam: int
    sigma: int
    tau: int
    cutoff_e: int

    def to_row(self) -> dict:
        return {"n": self.n, "lambda": self.lam, "sigma": self.sigma, "tau": self.tau, "e": self.cutoff_e}


def _check_ring(i: MonomialIdeal) -> None:
    if i.d < 2:
        raise ValueError(
            f"need at least 2 variables (the ring must have depth >= 2 at the irrelevant ideal), got d = {i.d}"
        )
    if i.is_unit():
        raise ValueError("the unit ideal is not proper")


def _h0_of_power(ipow: MonomialIdeal, strategy: str) -> tuple[int, int, MonomialIdeal]:
    sat = saturate_irrelevant(ipow)
    top = top_disagreement_degree(ipow, sat, strategy)
    if top < 0:
        return 0, top, sat
    ci = graded_counts(ipow, top, strategy)
    cs = graded_counts(sat, top, strategy)
    return sum(cs) - sum(ci), top, sat


def h0_length(i: MonomialIdeal, n: int, strategy: str = "pivot") -> int:
    """Length of H^0_m(R/I^n), i.e. the number of monomials in sat(I^n) outside I^n."""
    _check_ring(i)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return _h0_of_power(i**n, strategy)[0]


def sigma_tau(i: MonomialIdeal, n: int, e: int, strategy: str = "pivot") -> tuple[int, int]:
    if e < 1:
        raise ValueError(f"cutoff e must be at least 1, got {e}")
    ipow = i**n
    sat = saturate_irrelevant(ipow)
    top = e * n
    return sum(graded_counts(sat, top, strategy)), sum(graded_counts(ipow, top, strategy))


def sigma(i: MonomialIdeal, n: int, e: int, strategy: str = "pivot") -> int:
    """Monomials of sat(I^n) in degrees 0..e*n."""
    return sigma_tau(i, n, e, strategy)[0]


def tau(i: MonomialIdeal, n: int, e: int, strategy: str = "pivot") -> int:
    """Monomials of I^n in degrees 0..e*n."""
    return sigma_tau(i, n, e, strategy)[1]


def empirical_swanson_e(i: MonomialIdeal, n_max: int, strategy: str = "pivot") -> int:
    """Smallest slope e with I^n and sat(I^n) equal from degree e*n on, for all n <= n_max.

    Never below the top generator degree of I.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    e = max(i.max_degree(), 1)
    for n, ipow in enumerate(powers(i, n_max), start=1):
        top = top_disagreement_degree(ipow, saturate_irrelevant(ipow), strategy)
        e = max(e, -(-(top + 1) // n))
    return e


def length_table(
    i: MonomialIdeal, n_max: int, e: int | None = None, strategy: str = "pivot"
) -> list[LengthRecord]:
    _check_ring(i)
    return list(iter_length_table(i, n_max, e, strategy))


def iter_length_table(
    i: MonomialIdeal, n_max: int, e: int | None = None, strategy: str = "pivot"
) -> Iterator[LengthRecord]:
    _check_ring(i)
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    if e is None:
        e = empirical_swanson_e(i, n_max, strategy)
    elif e < 1:
        raise ValueError(f"cutoff e must be at least 1, got {e}")
    for n, ipow in enumerate(powers(i, n_max), start=1):
        lam, _, sat = _h0_of_power(ipow, strategy)
        top = e * n
        s = sum(graded_counts(sat, top, strategy))
        t = sum(graded_counts(ipow, top, strategy))
        yield LengthRecord(n=n, lam=lam, sigma=s, tau=t, cutoff_e=e)
