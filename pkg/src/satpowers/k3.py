"""Sections of I^n(m) for a curve C on a K3 surface S in P^3, and the irrational limit of sigma(n)/n^4.

Pic(S) is Z^3 with intersection form q(x, y, z) = 4x^2 - 4y^2 - 4z^2, the
hyperplane class is H = (1, 0, 0) and the curve class is C = (a, b, c). Write
D = b^2 + c^2 and lambda2 = a + sqrt(D). On the blow-up X of P^3 along C the
dimensions h0(m H~ - n E) obey

    h0(m, n) = h0(m - 4, n - 1) + [m > lambda2 n] * (q(mH - nC)/2 + 2),
    h0(m, 0) = C(m + 3, 3),

and sigma(n) = sum_{m=0}^{e n} h0(m, n). Two exact routes to sigma(n) are
provided: the recursion itself (``sigma_recursion``) and the regrouped sum of
P, Q, U, V terms (``sigma_decomposition``). Every comparison against the
irrational slope is done with integer squares and isqrt.
"""

from __future__ import annotations

import decimal
from dataclasses import dataclass
from fractions import Fraction

from satpowers import _kernels
from satpowers.numeric import QuadraticNumber, binomial, is_square, isqrt

__all__ = [
    "BlowupClass",
    "BlowupCohomology",
    "ConvergenceRow",
    "DivisorClass",
    "K3Params",
    "P",
    "Q",
    "U",
    "V",
    "closed_form_limit",
    "convergence_table",
    "floor_lambda_times",
    "floor_r_over_lambda",
    "h0_blowup",
    "h0_surface",
    "is_strictly_above",
    "pairing",
    "self_int",
    "sigma_decomposition",
    "sigma_recursion",
    "sigma_recursion_table",
]


@dataclass(frozen=True)
class K3Params:
    """Curve class (a, b, c) on S and the summation slope e. Validated on construction."""

    a: int = 4
    b: int = 3
    c: int = 2
    e: int = 8

    def __post_init__(self) -> None:
        a, D, e = self.a, self.D, self.e
        if a <= 0:
            raise ValueError(f"need a > 0, got a = {a}")
        if a * a - D <= 0:
            raise ValueError(f"need a^2 - b^2 - c^2 > 0, got {a * a - D}")
        if is_square(D):
            raise ValueError(f"b^2 + c^2 = {D} is a perfect square; sqrt(b^2 + c^2) must be irrational")
        if not (a > 7 or D > (7 - a) ** 2):
            raise ValueError(f"need lambda2 = {a} + sqrt({D}) > 7")
        if not (e > a and (e - a) ** 2 > D):
            raise ValueError(f"need e > lambda2 = {a} + sqrt({D}), got e = {e}")

    @property
    def D(self) -> int:
        return self.b * self.b + self.c * self.c

    @property
    def lambda1(self) -> QuadraticNumber:
        return QuadraticNumber(self.a, -1, self.D)

    @property
    def lambda2(self) -> QuadraticNumber:
        return QuadraticNumber(self.a, 1, self.D)

    @property
    def lam(self) -> QuadraticNumber:
        """lambda2 - 4, the slope in the shifted variable r = m - 4n."""
        return self.lambda2 - 4


@dataclass(frozen=True)
class DivisorClass:
    x: int
    y: int
    z: int

    def __add__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> DivisorClass:
        return DivisorClass(-self.x, -self.y, -self.z)

    def __rmul__(self, k: int) -> DivisorClass:
        return DivisorClass(k * self.x, k * self.y, k * self.z)

    @classmethod
    def hyperplane(cls) -> DivisorClass:
        return cls(1, 0, 0)

    @classmethod
    def curve(cls, params: K3Params) -> DivisorClass:
        return cls(params.a, params.b, params.c)


@dataclass(frozen=True)
class BlowupClass:
    """m H~ - n E on the blow-up of P^3 along C."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"the multiple of E must be nonnegative, got n = {self.n}")


def pairing(u: DivisorClass, v: DivisorClass) -> int:
    return 4 * u.x * v.x - 4 * u.y * v.y - 4 * u.z * v.z


def self_int(u: DivisorClass) -> int:
    return pairing(u, u)


def is_strictly_above(m: int, n: int, params: K3Params) -> bool:
    """Whether m > lambda2 * n. Equality never happens for n >= 1."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        return m > 0
    t = m - params.a * n
    return t > 0 and t * t > params.D * n * n


def floor_lambda_times(l: int, params: K3Params) -> int:
    """[lambda * l] for lambda = lambda2 - 4 and l >= 0."""
    if l < 0:
        raise ValueError(f"l must be nonnegative, got {l}")
    return (params.a - 4) * l + isqrt(params.D * l * l)


def _lambda_times_below(t: int, r: int, params: K3Params) -> bool:
    # lambda * t < r with t >= 1  <=>  sqrt(D) t < r - (a - 4) t
    s = r - (params.a - 4) * t
    return s > 0 and s * s > params.D * t * t


def floor_r_over_lambda(r: int, params: K3Params) -> int:
    """[r / lambda]: the largest t with lambda * t < r, and 0 when r <= 0."""
    if r <= 0:
        return 0
    lo, hi = 0, r  # lambda > 3, so t = r is always too big
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _lambda_times_below(mid, r, params):
            lo = mid
        else:
            hi = mid
    return lo


def h0_surface(m: int, n: int, params: K3Params) -> int:
    """h0(S, mH - nC) for n >= 1."""
    if n < 1:
        raise ValueError(f"h0_surface needs n >= 1, got {n}")
    if not is_strictly_above(m, n, params):
        return 0
    t = m - params.a * n
    return 2 * (t * t - params.D * n * n) + 2


class BlowupCohomology:
    """Memoized h0(X, m H~ - n E) for one parameter set."""

    def __init__(self, params: K3Params) -> None:
        self.params = params
        self._cache: dict[tuple[int, int], int] = {}

    def __call__(self, m: int, n: int) -> int:
        if n < 0:
            raise ValueError(f"n must be nonnegative, got {n}")
        cache = self._cache
        chain = []
        while n > 0 and (m, n) not in cache:
            chain.append((m, n))
            m, n = m - 4, n - 1
        value = cache[(m, n)] if n > 0 else binomial(m + 3, 3)
        for mm, nn in reversed(chain):
            value += h0_surface(mm, nn, self.params)
            cache[(mm, nn)] = value
        return value


def h0_blowup(m: int, n: int, params: K3Params) -> int:
    return BlowupCohomology(params)(m, n)


def sigma_recursion_table(params: K3Params, n_max: int, backend: str | None = None) -> list[int]:
    """[sigma(0), ..., sigma(n_max)] from the blow-up recursion, filled row by row."""
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    return _kernels.blowup_sigma(params.a, params.D, params.e, n_max, backend=backend)


def sigma_recursion(n: int, params: K3Params, backend: str | None = None) -> int:
    """sigma(n) = sum_{m=0}^{e n} h0(m H~ - n E)."""
    return sigma_recursion_table(params, n, backend)[n]


def _sum1(x: int) -> int:
    return x * (x + 1) // 2


def _sum2(x: int) -> int:
    # sum_{j=1}^{x} j^2, extended as a polynomial so sum_{j=A}^{B} = _sum2(B) - _sum2(A-1) for any A <= B+1
    return x * (x + 1) * (2 * x + 1) // 6


def P(s: int, r: int, params: K3Params) -> int:
    """Half the self-intersection of (r + 4s) H - s C."""
    c4 = 4 - params.a
    return 2 * ((r + c4 * s) ** 2 - params.D * s * s)


def Q(s: int, r: int, params: K3Params) -> int:
    """sum_{k=1}^{s} P(k, r); zero for s < 1."""
    if s < 1:
        return 0
    c4 = 4 - params.a
    return 2 * (s * r * r + 2 * c4 * r * _sum1(s) + (c4 * c4 - params.D) * _sum2(s))


def U(n: int, params: K3Params) -> int:
    """sum_{r=0}^{(e-4)n} C(r + 3, 3), summed by the hockey-stick identity."""
    return binomial((params.e - 4) * n + 4, 4)


def V(n: int, params: K3Params, printed_offset: bool = False) -> int:
    """2 * (sum_{r=0}^{[lambda n]} [r/lambda] + n * ((e-4)n - [lambda n])).

    ``printed_offset=True`` subtracts the extra n inside the bracket that appears
    in the published formula; it does not match the recursion and is kept only
    for comparison.
    """
    ln = floor_lambda_times(n, params)
    # sum_{r<=[lambda n]} [r/lambda] = sum_{t=1}^{n-1} ([lambda n] - [lambda t])
    floors = sum(ln - floor_lambda_times(t, params) for t in range(1, n))
    count = (params.e - 4) * n - ln - (1 if printed_offset else 0)
    return 2 * (floors + n * count)


def _range_sum_sq(lo: int, hi: int) -> int:
    if hi < lo:
        return 0
    return _sum2(hi) - _sum2(lo - 1)


def _range_sum(lo: int, hi: int) -> int:
    if hi < lo:
        return 0
    return _sum1(hi) - _sum1(lo - 1)


def sigma_decomposition(n: int, params: K3Params) -> int:
    """sigma(n) as the P-sums plus the Q-sum plus U(n) + V(n)."""
    if n < 1:
        raise ValueError(f"sigma_decomposition needs n >= 1, got {n}")
    c4 = 4 - params.a
    D = params.D
    ln = floor_lambda_times(n, params)
    total = 0
    for l in range(1, n):
        ll = floor_lambda_times(l, params)
        # sum_{r=ll+1}^{ln} 2((r + c4 l)^2 - D l^2)
        total += 2 * (_range_sum_sq(ll + 1 + c4 * l, ln + c4 * l) - D * l * l * (ln - ll))
    top = (params.e - 4) * n
    width = top - ln
    total += 2 * (
        n * _range_sum_sq(ln + 1, top)
        + 2 * c4 * _sum1(n) * _range_sum(ln + 1, top)
        + (c4 * c4 - D) * _sum2(n) * width
    )
    return total + U(n, params) + V(n, params)


def _limit_variants(params: K3Params) -> tuple[QuadraticNumber, QuadraticNumber]:
    c4 = 4 - params.a
    f = params.e - 4
    D = params.D
    lam = params.lam
    A = Fraction(2, 3) * f**3 + c4 * f**2 + Fraction(2, 3) * (c4 * c4 - D) * f
    B = Fraction(f**4, 24)
    tail = Fraction(1, 6) * lam**3 + Fraction(c4 * c4 - D, 2) * lam
    with_linear = A + B - (tail + Fraction(c4, 2) * lam**2)
    with_square = A + B - (tail + Fraction(c4 * c4, 2) * lam**2)
    return with_linear, with_square


def closed_form_limit(params: K3Params) -> QuadraticNumber:
    """lim sigma(n)/n^4 as an element of Q(sqrt(D)). Only defined here for a = 4."""
    with_linear, with_square = _limit_variants(params)
    if params.a != 4:
        raise ValueError(
            "closed form is only supported for a = 4; for other a the lambda^2 coefficient is "
            f"ambiguous: (4-a)/2 gives {with_linear} and (4-a)^2/2 gives {with_square}"
        )
    return with_linear


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    sigma: int
    ratio: Fraction
    extrapolant: Fraction | None

    def to_row(self, digits: int = 30) -> dict:
        ext = None
        if self.extrapolant is not None:
            ctx = decimal.Context(prec=digits)
            ext = str(ctx.divide(decimal.Decimal(self.extrapolant.numerator), decimal.Decimal(self.extrapolant.denominator)))
        return {
            "n": self.n,
            "sigma": self.sigma,
            "ratio_num": self.ratio.numerator,
            "ratio_den": self.ratio.denominator,
            "extrapolant_decimal": ext,
        }


def convergence_table(params: K3Params, n_max: int, backend: str | None = None) -> list[ConvergenceRow]:
    """Rows (n, sigma(n), sigma(n)/n^4, 2 r(n) - r(n/2)) for n = 1..n_max.

    The extrapolant column is only filled for even n.
    """
    if n_max < 8:
        raise ValueError(f"n_max must be at least 8, got {n_max}")
    sig = sigma_recursion_table(params, n_max, backend)
    ratios = {n: Fraction(sig[n], n**4) for n in range(1, n_max + 1)}
    rows = []
    for n in range(1, n_max + 1):
        ext = 2 * ratios[n] - ratios[n // 2] if n % 2 == 0 else None
        rows.append(ConvergenceRow(n, sig[n], ratios[n], ext))
    return rows


def sigma_modes(params: K3Params, n_max: int, mode: str = "recursion") -> list[int]:
    """[sigma(1), ..., sigma(n_max)] by either exact route."""
    if mode == "recursion":
        return sigma_recursion_table(params, n_max)[1:]
    if mode == "decomposition":
        return [sigma_decomposition(n, params) for n in range(1, n_max + 1)]
    raise ValueError(f"unknown mode {mode!r}; expected 'recursion' or 'decomposition'")
