"""Pure-Python versions of the hot loops. Same signatures as ``_ckernels``."""

from __future__ import annotations

from math import comb
from typing import Sequence


def degree_counts(gens: Sequence[Sequence[int]], d: int, top: int) -> list[int]:
    """Count monomials of each degree 0..top lying in the ideal spanned by ``gens``.

    Every exponent vector of each degree is visited and tested for divisibility
    by some generator.
    """
    counts = [0] * (top + 1)
    if not gens or top < 0:
        return counts
    if d == 0:
        counts[0] = 1
        return counts
    by_degree = sorted((sum(g), tuple(g)) for g in gens)
    e = [0] * d
    for m in range(top + 1):
        active = [g for deg, g in by_degree if deg <= m]
        if not active:
            continue
        if len(active) == 1 and not any(active[0]):
            counts[m] = comb(m + d - 1, d - 1)
            continue
        e[0] = m
        for j in range(1, d):
            e[j] = 0
        c = 0
        while True:
            for g in active:
                for j in range(d):
                    if g[j] > e[j]:
                        break
                else:
                    c += 1
                    break
            tail = e[d - 1]
            e[d - 1] = 0
            i = d - 2
            while i >= 0 and e[i] == 0:
                i -= 1
            if i < 0:
                break
            e[i] -= 1
            e[i + 1] = tail + 1
        counts[m] = c
    return counts


def blowup_sigma(a: int, D: int, e: int, nmax: int) -> list[int]:
    """sigma(n) = sum_{m=0}^{e*n} h0(m, n) for n = 0..nmax.

    Rows are filled bottom-up from h0(m, 0) = C(m+3, 3) using
    h0(m, n) = h0(m-4, n-1) + surface term when m > (a + sqrt D) n.
    """
    width = e * nmax + 1
    prev = [comb(m + 3, 3) for m in range(width)]
    sigmas = [prev[0]]
    for n in range(1, nmax + 1):
        an = a * n
        dn2 = D * n * n
        cur = [0] * width
        for m in range(4, width):
            cur[m] = prev[m - 4]
        lo = max(an + 1, 0)
        for m in range(lo, width):
            t = m - an
            if t * t > dn2:
                cur[m] += 2 * (t * t - dn2) + 2
        sigmas.append(sum(cur[: e * n + 1]))
        prev = cur
    return sigmas
