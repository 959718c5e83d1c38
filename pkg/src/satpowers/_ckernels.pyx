# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in ``_pykernels``.

Both kernels work in 64-bit integers. Callers go through ``satpowers._kernels``,
which only dispatches here when the inputs are known to fit.
"""

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t


def degree_counts(gens, int d, int top):
    cdef int ngens = len(gens)
    cdef int m, i, j, g, tail
    cdef int64_t c
    cdef int *e
    cdef int *gv
    cdef int *gdeg
    cdef bint divides
    counts = [0] * (top + 1) if top >= 0 else []
    if ngens == 0 or top < 0:
        return counts
    if d == 0:
        counts[0] = 1
        return counts
    e = <int *> malloc(d * sizeof(int))
    gv = <int *> malloc(ngens * d * sizeof(int))
    gdeg = <int *> malloc(ngens * sizeof(int))
    if e == NULL or gv == NULL or gdeg == NULL:
        free(e)
        free(gv)
        free(gdeg)
        raise MemoryError()
    try:
        for g in range(ngens):
            row = gens[g]
            gdeg[g] = 0
            for j in range(d):
                gv[g * d + j] = row[j]
                gdeg[g] += row[j]
        for m in range(top + 1):
            e[0] = m
            for j in range(1, d):
                e[j] = 0
            c = 0
            while True:
                for g in range(ngens):
                    if gdeg[g] > m:
                        continue
                    divides = True
                    for j in range(d):
                        if gv[g * d + j] > e[j]:
                            divides = False
                            break
                    if divides:
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
    finally:
        free(e)
        free(gv)
        free(gdeg)
    return counts


def blowup_sigma(int64_t a, int64_t D, int64_t e, int nmax):
    cdef int64_t width = e * nmax + 1
    cdef int64_t m, n, an, dn2, t, total
    cdef int64_t *prev
    cdef int64_t *cur
    cdef int64_t *tmp
    prev = <int64_t *> malloc(width * sizeof(int64_t))
    cur = <int64_t *> malloc(width * sizeof(int64_t))
    if prev == NULL or cur == NULL:
        free(prev)
        free(cur)
        raise MemoryError()
    sigmas = [1]
    try:
        for m in range(width):
            prev[m] = (m + 3) * (m + 2) * (m + 1) // 6
        for n in range(1, nmax + 1):
            an = a * n
            dn2 = D * n * n
            for m in range(4 if width > 4 else width):
                cur[m] = 0
            for m in range(4, width):
                cur[m] = prev[m - 4]
            for m in range(an + 1 if an + 1 > 0 else 0, width):
                t = m - an
                if t * t > dn2:
                    cur[m] += 2 * (t * t - dn2) + 2
            total = 0
            for m in range(e * n + 1):
                total += cur[m]
            sigmas.append(total)
            tmp = prev
            prev = cur
            cur = tmp
    finally:
        free(prev)
        free(cur)
    return sigmas
