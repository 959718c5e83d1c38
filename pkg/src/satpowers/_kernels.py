"""Kernel backend selection.

The compiled extension is used when it imports and the inputs fit in 64-bit
integers; otherwise the pure-Python kernels run. Set ``SATPOWERS_PURE_PYTHON=1``
to force the fallback.
"""

from __future__ import annotations

import os
from math import comb
from typing import Sequence

from satpowers import _pykernels

_LIMIT = 1 << 62

_compiled = None
if not os.environ.get("SATPOWERS_PURE_PYTHON"):
    try:
        from satpowers import _ckernels as _compiled
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


def degree_counts(gens: Sequence[Sequence[int]], d: int, top: int, backend: str | None = None) -> list[int]:
    impl = _pick(backend)
    if impl is not _pykernels and d > 0 and top >= 0:
        if comb(top + d - 1, d - 1) >= _LIMIT or top >= 1 << 30:
            impl = _pykernels
        elif any(x >= 1 << 30 for g in gens for x in g):
            impl = _pykernels
    return impl.degree_counts([tuple(g) for g in gens], d, top)


def blowup_sigma(a: int, D: int, e: int, nmax: int, backend: str | None = None) -> list[int]:
    impl = _pick(backend)
    if impl is not _pykernels:
        width = e * nmax + 1
        tmax = width + abs(a) * nmax
        bound = width * (comb(width + 3, 3) + nmax * (2 * (tmax * tmax + D * nmax * nmax) + 2))
        if bound >= _LIMIT:
            impl = _pykernels
    return impl.blowup_sigma(a, D, e, nmax)


def _pick(backend: str | None):
    if backend is None:
        return _compiled if _compiled is not None else _pykernels
    if backend == "python":
        return _pykernels
    if backend == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not available in this build")
        return _compiled
    raise ValueError(f"unknown backend {backend!r}")
