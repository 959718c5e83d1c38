import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from satpowers.monomial import (
    MonomialIdeal,
    colon_var_infinity,
    count_graded_piece,
    count_standard,
    graded_counts,
    intersect,
    minimalize,
    multiply,
    power,
    saturate_irrelevant,
    top_disagreement_degree,
)

from oracles import count_in, expand_power, member, monomials, same_ideal, saturation_gens


def ideal(d, *gens):
    return MonomialIdeal(d, gens)


X, Y, Z = (1, 0, 0), (0, 1, 0), (0, 0, 1)


@st.composite
def monomial_ideals(draw, max_d=3, max_gens=4, max_exp=4, min_d=1):
    d = draw(st.integers(min_value=min_d, max_value=max_d))
    vec = st.tuples(*[st.integers(min_value=0, max_value=max_exp)] * d)
    gens = draw(st.lists(vec, min_size=1, max_size=max_gens))
    return MonomialIdeal(d, gens)


def random_ideal(rng, d, max_gens=4, max_exp=4):
    k = rng.randint(1, max_gens)
    return MonomialIdeal(d, [tuple(rng.randint(0, max_exp) for _ in range(d)) for _ in range(k)])


# minimalize


def test_minimalize_drops_multiples():
    assert minimalize([(2, 0), (2, 1), (0, 1)]).gens == ((2, 0), (0, 1))


def test_minimalize_empty_is_zero_ideal():
    i = minimalize([], d=2)
    assert i.is_zero() and i == MonomialIdeal.zero(2)


def test_minimalize_rejects_mixed_lengths():
    with pytest.raises(ValueError):
        minimalize([(1, 0), (1, 0, 0)])


def test_minimalize_random_sets_generate_same_ideal():
    rng = random.Random(1)
    for _ in range(50):
        d = rng.randint(1, 3)
        raw = [tuple(rng.randint(0, 4) for _ in range(d)) for _ in range(rng.randint(1, 8))]
        i = minimalize(raw)
        assert set(i.gens) <= set(raw)
        assert all(member(u, i.gens) for u in raw)
        for g in i.gens:
            assert not any(h != g and member(g, [h]) for h in i.gens)


# products and powers


def test_square_of_maximal_ideal():
    assert power(MonomialIdeal.maximal(2), 2) == ideal(2, (2, 0), (1, 1), (0, 2))


@pytest.mark.parametrize("n", range(1, 6))
def test_power_of_x2_xy(n):
    i = ideal(2, (2, 0), (1, 1))
    expected = ideal(2, *[(n + a, n - a) for a in range(n + 1)])  # x^n * (x, y)^n
    assert power(i, n) == expected
    assert power(i, n) == minimalize(expand_power(list(i.gens), n))


def test_power_one_and_invalid():
    i = ideal(3, (1, 2, 0), (0, 0, 3))
    assert power(i, 1) == i
    with pytest.raises(ValueError):
        power(i, 0)


@settings(max_examples=60, deadline=None)
@given(monomial_ideals(), st.integers(1, 3), st.integers(1, 3))
def test_power_additivity(i, a, b):
    assert multiply(power(i, a), power(i, b)) == power(i, a + b)


# colon and intersection


def test_colon_examples():
    assert colon_var_infinity(ideal(3, (2, 1, 0), Z), 2) == ideal(3, (2, 0, 0), Z)
    assert colon_var_infinity(ideal(2, (1, 0)), 1).is_unit()
    with pytest.raises(IndexError):
        colon_var_infinity(ideal(2, (1, 0)), 3)


def test_colon_matches_brute_force():
    rng = random.Random(2)
    for _ in range(60):
        d = rng.randint(1, 3)
        i = random_ideal(rng, d)
        k = max(max(g) for g in i.gens)
        for var in range(1, d + 1):
            j = colon_var_infinity(i, var)
            for m in range(7):
                for u in monomials(d, m):
                    shifted = tuple(x + (k if t == var - 1 else 0) for t, x in enumerate(u))
                    assert (u in j) == member(shifted, i.gens)


def test_intersect_examples():
    assert intersect(ideal(2, (1, 0)), ideal(2, (0, 1))) == ideal(2, (1, 1))
    i = ideal(3, (2, 1, 0), (0, 0, 2))
    assert intersect(i, i) == i
    assert intersect(i, MonomialIdeal.zero(3)).is_zero()


def test_intersect_matches_membership():
    rng = random.Random(3)
    for _ in range(40):
        d = rng.randint(1, 3)
        i, j = random_ideal(rng, d), random_ideal(rng, d)
        k = intersect(i, j)
        for m in range(9):
            for u in monomials(d, m):
                assert (u in k) == (u in i and u in j)


# saturation


def test_saturate_examples():
    assert saturate_irrelevant(ideal(2, (2, 0), (1, 1))) == ideal(2, (1, 0))
    assert same_ideal(saturation_gens([(2, 0), (1, 1)], 2), [(1, 0)], 2, 6)
    for k in range(1, 5):
        assert saturate_irrelevant(power(MonomialIdeal.maximal(2), k)).is_unit()
    assert saturate_irrelevant(ideal(2, (1, 0))) == ideal(2, (1, 0))
    assert saturate_irrelevant(MonomialIdeal.zero(3)).is_zero()


def test_saturate_is_not_the_product_colon():
    # I : (x1 ... xd)^inf would give the unit ideal for (x1)
    i = ideal(2, (1, 0))
    assert not saturate_irrelevant(i).is_unit()


@settings(max_examples=80, deadline=None)
@given(monomial_ideals())
def test_saturation_extensive_idempotent(i):
    s = saturate_irrelevant(i)
    assert i.issubset(s)
    assert saturate_irrelevant(s) == s


@settings(max_examples=80, deadline=None)
@given(monomial_ideals())
def test_saturation_matches_brute_force(i):
    s = saturate_irrelevant(i)
    assert MonomialIdeal(i.d, saturation_gens(list(i.gens), i.d)) == s


# counting


@pytest.mark.parametrize("strategy", ["enumerate", "pivot"])
def test_count_examples(strategy):
    assert count_graded_piece(power(MonomialIdeal.maximal(2), 2), 3, strategy) == 4
    assert count_graded_piece(MonomialIdeal.zero(2), 7, strategy) == 0
    assert count_graded_piece(ideal(2, (1, 0)), 5, strategy) == count_in([(1, 0)], 2, 5) == 5


@pytest.mark.parametrize("strategy", ["enumerate", "pivot"])
def test_count_standard_examples(strategy):
    assert count_standard(MonomialIdeal.maximal(2), 3, strategy) == 0
    assert count_standard(MonomialIdeal.zero(2), 3, strategy) == 4
    assert count_standard(ideal(2, (2, 0), (0, 3)), 2, strategy) == 2


def test_count_below_min_degree_is_zero():
    i = ideal(3, (2, 1, 0), (0, 2, 2))
    assert graded_counts(i, 2) == [0, 0, 0]


def test_strategies_agree_on_random_instances():
    rng = random.Random(4)
    for _ in range(200):
        d = rng.randint(1, 4)
        i = random_ideal(rng, d)
        top = rng.randint(0, 20)
        assert graded_counts(i, top, "pivot") == graded_counts(i, top, "enumerate")


def test_pivot_matches_brute_force_counts():
    rng = random.Random(5)
    for _ in range(40):
        d = rng.randint(1, 3)
        i = random_ideal(rng, d)
        assert graded_counts(i, 8, "pivot") == [count_in(i.gens, d, m) for m in range(9)]


@settings(max_examples=60, deadline=None)
@given(monomial_ideals(max_d=4), st.integers(0, 12))
def test_count_plus_standard_is_total(i, m):
    assert count_graded_piece(i, m) + count_standard(i, m) == comb(m + i.d - 1, i.d - 1)


def test_count_rejects_negative_degree():
    with pytest.raises(ValueError):
        count_graded_piece(ideal(2, (1, 0)), -1)
    with pytest.raises(ValueError):
        graded_counts(ideal(2, (1, 0)), 3, "bogus")


def test_unit_and_zero_are_legal():
    assert graded_counts(MonomialIdeal.unit(3), 3) == [1, 3, 6, 10]
    assert graded_counts(MonomialIdeal.unit(3), 3, "enumerate") == [1, 3, 6, 10]


# top disagreement


def test_top_disagreement_examples():
    assert top_disagreement_degree(ideal(2, (2, 0), (1, 1)), ideal(2, (1, 0))) == 1
    i = ideal(3, (2, 1, 0), Z)
    assert top_disagreement_degree(i, i) == -1
    m4 = power(MonomialIdeal.maximal(2), 4)
    assert top_disagreement_degree(m4, MonomialIdeal.unit(2)) == 3


def test_top_disagreement_requires_containment():
    with pytest.raises(ValueError):
        top_disagreement_degree(ideal(2, (1, 0)), ideal(2, (2, 0)))


def test_top_disagreement_matches_exhaustive_scan():
    rng = random.Random(6)
    for _ in range(40):
        d = rng.randint(2, 3)
        i = random_ideal(rng, d)
        s = saturate_irrelevant(i)
        top = top_disagreement_degree(i, s)
        scan = [m for m in range(25) if count_in(s.gens, d, m) != count_in(i.gens, d, m)]
        assert top == (max(scan) if scan else -1)
