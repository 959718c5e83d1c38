"""Monomial ideals in k[x_1, ..., x_d].

A monomial is an exponent vector (a tuple of nonnegative ints). An ideal is
stored by its minimal generators, which form an antichain under divisibility.
The zero ideal has no generators; the unit ideal is generated by the zero
vector.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Iterator, Sequence

from satpowers import _kernels

__all__ = [
    "MonomialIdeal",
    "colon_var_infinity",
    "count_graded_piece",
    "count_standard",
    "divides",
    "graded_counts",
    "intersect",
    "minimalize",
    "monomials_of_degree",
    "multiply",
    "power",
    "saturate_irrelevant",
    "top_disagreement_degree",
]

Monomial = tuple[int, ...]
STRATEGIES = ("enumerate", "pivot")


def divides(u: Sequence[int], v: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(u, v))


def monomials_of_degree(d: int, m: int) -> Iterator[Monomial]:
    """All exponent vectors of length ``d`` and total degree ``m``."""
    if m < 0:
        return
    if d == 0:
        if m == 0:
            yield ()
        return
    if d == 1:
        yield (m,)
        return
    for first in range(m, -1, -1):
        for rest in monomials_of_degree(d - 1, m - first):
            yield (first,) + rest


def _antichain(vectors: Iterable[Monomial]) -> tuple[Monomial, ...]:
    kept: list[Monomial] = []
    for v in sorted(set(vectors), key=lambda u: (sum(u), u)):
        if not any(divides(k, v) for k in kept):
            kept.append(v)
    return tuple(sorted(kept, reverse=True))


class MonomialIdeal:
    """Monomial ideal given by its minimal generators in ``d`` variables.

    Construction always minimalizes, so two ideals are equal exactly when their
    generator tuples are.
    """

    __slots__ = ("d", "gens", "__weakref__")

    def __init__(self, d: int, gens: Iterable[Sequence[int]] = ()) -> None:
        if d < 0:
            raise ValueError(f"ambient dimension must be nonnegative, got {d}")
        vecs = []
        for g in gens:
            g = tuple(int(x) for x in g)
            if len(g) != d:
                raise ValueError(f"exponent vector {g} has length {len(g)}, expected {d}")
            if any(x < 0 for x in g):
                raise ValueError(f"negative exponent in {g}")
            vecs.append(g)
        self.d = d
        self.gens: tuple[Monomial, ...] = _antichain(vecs)

    @classmethod
    def zero(cls, d: int) -> MonomialIdeal:
        return cls(d, ())

    @classmethod
    def unit(cls, d: int) -> MonomialIdeal:
        return cls(d, [(0,) * d])

    @classmethod
    def maximal(cls, d: int) -> MonomialIdeal:
        """The irrelevant ideal (x_1, ..., x_d)."""
        return cls(d, [tuple(int(i == j) for j in range(d)) for i in range(d)])

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.d,)

    def max_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def min_degree(self) -> int:
        return min((sum(g) for g in self.gens), default=0)

    def __contains__(self, u: Sequence[int]) -> bool:
        return any(divides(g, u) for g in self.gens)

    def issubset(self, other: MonomialIdeal) -> bool:
        _check_same(self, other)
        return all(g in other for g in self.gens)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.d == other.d and self.gens == other.gens

    def __hash__(self) -> int:
        return hash((self.d, self.gens))

    def __repr__(self) -> str:
        return f"MonomialIdeal({self.d}, {list(self.gens)})"

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        return multiply(self, other)

    def __and__(self, other: MonomialIdeal) -> MonomialIdeal:
        return intersect(self, other)

    def __pow__(self, n: int) -> MonomialIdeal:
        return power(self, n)


def _check_same(i: MonomialIdeal, j: MonomialIdeal) -> None:
    if i.d != j.d:
        raise ValueError(f"ideals live in different rings ({i.d} vs {j.d} variables)")


def minimalize(gens: Iterable[Sequence[int]], d: int | None = None) -> MonomialIdeal:
    """Reduce a set of exponent vectors to a minimal generating set.

    ``d`` is only needed when ``gens`` is empty (the zero ideal); otherwise it
    is read off the vectors, which must all have the same length.
    """
    gens = [tuple(g) for g in gens]
    lengths = {len(g) for g in gens}
    if len(lengths) > 1:
        raise ValueError(f"exponent vectors of mixed lengths {sorted(lengths)}")
    if lengths:
        (n,) = lengths
        if d is not None and d != n:
            raise ValueError(f"vectors have length {n}, expected {d}")
        d = n
    if d is None:
        raise ValueError("cannot infer the number of variables of an empty generator set")
    return MonomialIdeal(d, gens)


def multiply(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    _check_same(i, j)
    sums = {tuple(a + b for a, b in zip(g, h)) for g in i.gens for h in j.gens}
    return MonomialIdeal(i.d, sums)


def power(i: MonomialIdeal, n: int) -> MonomialIdeal:
    if n <= 0:
        raise ValueError(f"power exponent must be positive, got {n}")
    result = i
    for _ in range(n - 1):
        result = multiply(result, i)
    return result


def powers(i: MonomialIdeal, nmax: int) -> Iterator[MonomialIdeal]:
    """Yield I, I^2, ..., I^nmax, reusing each power for the next."""
    current = i
    for n in range(1, nmax + 1):
        if n > 1:
            current = multiply(current, i)
        yield current


def colon_var_infinity(i: MonomialIdeal, var: int) -> MonomialIdeal:
    """I : x_var^infinity. ``var`` is 1-based."""
    if not 1 <= var <= i.d:
        raise IndexError(f"variable index {var} out of range 1..{i.d}")
    k = var - 1
    return MonomialIdeal(i.d, (g[:k] + (0,) + g[k + 1 :] for g in i.gens))


def intersect(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    _check_same(i, j)
    lcms = {tuple(max(a, b) for a, b in zip(g, h)) for g in i.gens for h in j.gens}
    return MonomialIdeal(i.d, lcms)


def saturate_irrelevant(i: MonomialIdeal) -> MonomialIdeal:
    """I : m^infinity for m = (x_1, ..., x_d), as the intersection of the I : x_i^infinity."""
    if i.is_zero() or i.d == 0:
        return i
    result = colon_var_infinity(i, 1)
    for var in range(2, i.d + 1):
        result = intersect(result, colon_var_infinity(i, var))
    return result


def _total(d: int, m: int) -> int:
    """Number of monomials of degree m in d variables."""
    if m < 0:
        return 0
    if d == 0:
        return int(m == 0)
    return comb(m + d - 1, d - 1)


def _pivot_counts(d: int, gens: tuple[Monomial, ...], top: int, memo: dict) -> list[int]:
    key = (d, gens)
    hit = memo.get(key)
    if hit is not None and len(hit) > top:
        return hit[: top + 1]

    if not gens:
        out = [0] * (top + 1)
    elif not any(gens[0]) and len(gens) == 1:
        out = [_total(d, m) for m in range(top + 1)]
    elif d == 1:
        (k,) = gens[0]
        out = [int(m >= k) for m in range(top + 1)]
    else:
        # pivot: the variable carrying the largest exponent
        piv = max(range(d), key=lambda j: max(g[j] for g in gens))
        cap = max(g[piv] for g in gens)
        # monomials x_piv^k * v lie in I iff v lies in the ideal of the
        # generators with exponent <= k at piv, with that coordinate dropped
        slices = []
        for k in range(cap + 1):
            sub = [g[:piv] + g[piv + 1 :] for g in gens if g[piv] <= k]
            if sub or k == cap:
                slices.append(_pivot_counts(d - 1, _antichain(sub), top, memo))
            else:
                slices.append(None)
        out = [0] * (top + 1)
        stable = slices[cap]
        prefix = [0] * (top + 2)
        for m in range(top + 1):
            prefix[m + 1] = prefix[m] + stable[m]
        for m in range(top + 1):
            c = 0
            for k in range(min(m, cap - 1) + 1):
                if k < cap and slices[k] is not None:
                    c += slices[k][m - k]
            if m >= cap:
                c += prefix[m - cap + 1]
            out[m] = c
    memo[key] = out
    return out


def graded_counts(i: MonomialIdeal, top: int, strategy: str = "pivot", backend: str | None = None) -> list[int]:
    """Number of degree-m monomials in I for every m in 0..top.

    ``enumerate`` tests every monomial for membership and serves as the
    reference; ``pivot`` splits on one variable at a time and is much faster.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown counting strategy {strategy!r}; expected one of {STRATEGIES}")
    if top < 0:
        return []
    if strategy == "enumerate":
        return _kernels.degree_counts(i.gens, i.d, top, backend=backend)
    return _pivot_counts(i.d, i.gens, top, {})


def count_graded_piece(i: MonomialIdeal, m: int, strategy: str = "pivot") -> int:
    if m < 0:
        raise ValueError(f"degree must be nonnegative, got {m}")
    return graded_counts(i, m, strategy)[m]


def count_standard(i: MonomialIdeal, m: int, strategy: str = "pivot") -> int:
    """Number of degree-m monomials outside I."""
    return _total(i.d, m) - count_graded_piece(i, m, strategy)


def top_disagreement_degree(i: MonomialIdeal, j: MonomialIdeal, strategy: str = "pivot") -> int:
    """Largest degree where J has more monomials than I (requires I inside J), or -1.

    The scan stops at the first degree at least the top generator degree of J
    where the counts agree: past that point every monomial of J is a variable
    times a monomial of J one degree lower, which already lies in I.
    """
    _check_same(i, j)
    if not i.issubset(j):
        raise ValueError("top_disagreement_degree requires I to be contained in J")
    floor = j.max_degree()
    top = max(2 * floor, 8)
    while True:
        ci = graded_counts(i, top, strategy)
        cj = graded_counts(j, top, strategy)
        last = -1
        for m in range(top + 1):
            if cj[m] != ci[m]:
                last = m
            elif m >= floor:
                return last
        top *= 2
