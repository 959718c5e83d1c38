"""Exit criteria. Each test prints one PASS/FAIL line (see conftest.py)."""

import json
import random
import time
from fractions import Fraction
from math import factorial

import pytest

from satpowers.asymptotics import colength, richardson_limit
from satpowers.cli import main
from satpowers.k3 import K3Params, closed_form_limit, sigma_decomposition, sigma_recursion_table
from satpowers.lengths import empirical_swanson_e, h0_length, sigma_tau
from satpowers.monomial import MonomialIdeal, graded_counts, power, powers, saturate_irrelevant
from satpowers.numeric import QuadraticNumber

from oracles import saturation_gens

pytestmark = pytest.mark.acceptance

DEFAULT = K3Params(4, 3, 2, 8)


def ideal(d, *gens):
    return MonomialIdeal(d, gens)


def test_ac1_k3_closed_form(capsys):
    start = time.perf_counter()
    assert main(["k3", "limit", "--a", "4", "--b", "3", "--c", "2", "--e", "8"]) == 0
    payload = json.loads(capsys.readouterr().out)
    elapsed = time.perf_counter() - start

    assert (payload["p"], payload["q"], payload["D"]) == ("56/3", "13/3", 13)
    assert payload["irrational"] is True
    # A from the Q-sum coefficients, B from the sum of C(r+3, 3), at a = 4
    f, D = 8 - 4, 13
    A = Fraction(2, 3) * f**3 + 0 * f**2 + Fraction(2, 3) * (0 - D) * f
    B = Fraction(f**4, 24)
    limit = closed_form_limit(DEFAULT)
    assert limit.p == A + B == Fraction(56, 3)
    assert limit.q == Fraction(13, 3) != 0
    assert elapsed < 1.0


def test_ac2_k3_cross_validation():
    start = time.perf_counter()
    rec = sigma_recursion_table(DEFAULT, 64)
    dec = [sigma_decomposition(n, DEFAULT) for n in range(1, 65)]
    elapsed = time.perf_counter() - start
    assert dec == rec[1:]
    assert elapsed < 10.0


@pytest.mark.parametrize("backend", ["default", "python"])
def test_ac3_k3_convergence(backend):
    start = time.perf_counter()
    sig = sigma_recursion_table(DEFAULT, 256, backend=None if backend == "default" else "python")
    elapsed = time.perf_counter() - start

    L = closed_form_limit(DEFAULT)

    def ratio(n):
        return Fraction(sig[n], n**4)

    def err(x: Fraction) -> QuadraticNumber:
        diff = L - x
        return diff if diff.sign() >= 0 else -diff

    final = 2 * ratio(256) - ratio(128)
    assert err(final) * 100 < L

    ns = (16, 32, 64, 128)
    raw = [err(ratio(n)) for n in ns]
    ext = [err(2 * ratio(2 * n) - ratio(n)) for n in ns]
    assert all(a > b for a, b in zip(raw, raw[1:])), raw
    assert all(a > b for a, b in zip(ext, ext[1:])), ext
    assert all(e < r for e, r in zip(ext, raw))
    assert elapsed < 60.0


@pytest.mark.parametrize(
    "name, i",
    [
        ("(x^2,xy)", ideal(2, (2, 0), (1, 1))),
        ("(x,y)^2", power(MonomialIdeal.maximal(2), 2)),
        ("(x^2,y^3)", ideal(2, (2, 0), (0, 3))),
        ("(x,y,z)^2", power(MonomialIdeal.maximal(3), 2)),
    ],
)
def test_ac4_sigma_tau_identity(name, i):
    e = empirical_swanson_e(i, 15)
    for n in range(1, 16):
        s, t = sigma_tau(i, n, e)
        assert s - t == h0_length(i, n), (name, n)


@pytest.mark.parametrize(
    "name, i, mult",
    [
        ("(x,y)", MonomialIdeal.maximal(2), 1),
        ("(x,y)^2", power(MonomialIdeal.maximal(2), 2), 4),
        ("(x,y,z)", MonomialIdeal.maximal(3), 1),
    ],
)
def test_ac5_mprimary_limits(name, i, mult):
    n_max = 30
    lams = []
    for n, ipow in enumerate(powers(i, n_max), start=1):
        lam = h0_length(i, n)
        assert lam == colength(ipow, strategy="enumerate"), (name, n)
        lams.append(lam)
    est = richardson_limit(lams, i.d, order=i.d)
    assert factorial(i.d) * est.extrapolated == mult


def test_ac6_nonzero_limit_below_full_height():
    i = ideal(2, (2, 0), (1, 1))
    lams = [h0_length(i, n) for n in range(1, 51)]
    assert lams == [n * (n + 1) // 2 for n in range(1, 51)]
    assert richardson_limit(lams, 2).extrapolated == Fraction(1, 2)


def test_ac7_vanishing_for_saturated_powers():
    i = ideal(4, (1, 0, 0, 0), (0, 1, 0, 0))
    assert [h0_length(i, n) for n in range(1, 13)] == [0] * 12


def test_ac8_oracle_equivalence():
    rng = random.Random(20261016)
    for _ in range(100):
        d = rng.randint(1, 3)
        gens = [tuple(rng.randint(0, 4) for _ in range(d)) for _ in range(rng.randint(1, 4))]
        i = MonomialIdeal(d, gens)
        assert saturate_irrelevant(i) == MonomialIdeal(d, saturation_gens(list(i.gens), d)), gens
        assert graded_counts(i, 15, "enumerate") == graded_counts(i, 15, "pivot"), gens
        assert graded_counts(i, 15, "enumerate", backend="python") == graded_counts(i, 15, "pivot"), gens
