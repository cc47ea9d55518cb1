from fractions import Fraction

import pytest

from vanlab.arith import mod_inv, primes_between
from vanlab.bernoulli import (
    PrecisionExhausted,
    bernoulli_even_mod_p,
    bernoulli_even_mod_p_recurrence,
    eigenspace_exponent,
    gen_bernoulli_B1,
    index_of_irregularity,
    irregular_indices,
    irregular_pairs,
)


def exact_bernoulli(n):
    """B_0..B_n as exact rationals (Akiyama-Tanigawa), with B_1 = +1/2."""
    out = []
    a = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    return out


EXACT = exact_bernoulli(160)


def exact_mod(x, p):
    return x.numerator * mod_inv(x.denominator, p) % p


def test_exact_oracle_sanity():
    assert EXACT[2] == Fraction(1, 6)
    assert EXACT[4] == Fraction(-1, 30)
    assert EXACT[12] == Fraction(-691, 2730)


@pytest.mark.parametrize("p, table", [(5, {2: 1}), (7, {2: 6, 4: 3}), (3, {})])
def test_table_examples(p, table):
    assert bernoulli_even_mod_p(p).values == table
    assert bernoulli_even_mod_p_recurrence(p).values == table


def test_table_matches_exact_rationals():
    for p in primes_between(5, 163):
        t = bernoulli_even_mod_p(p).values
        assert t == {k: exact_mod(EXACT[k], p) for k in range(2, p - 2, 2)}, p


def test_p37_has_single_zero_at_32():
    t = bernoulli_even_mod_p(37).values
    assert t[32] == 0
    assert all(v for k, v in t.items() if k != 32)


def test_dual_algorithms_agree():
    for p in primes_between(3, 500):
        assert bernoulli_even_mod_p(p) == bernoulli_even_mod_p_recurrence(p), p


@pytest.mark.parametrize("p, ks", [(13, []), (37, [32]), (157, [62, 110]), (691, [12, 200]), (3, [])])
def test_irregular_indices(p, ks):
    assert irregular_indices(p) == ks
    assert index_of_irregularity(p) == len(ks)


def test_index_examples():
    assert index_of_irregularity(11) == 0
    assert index_of_irregularity(691) == 2
    assert index_of_irregularity(157) == 2


def hensel_teichmuller(a, p, m):
    """Root of x^(p-1) = 1 lifting a, by Newton iteration mod p^m."""
    pm = p**m
    x = a
    for _ in range(m + 1):
        f = (pow(x, p - 1, pm) - 1) % pm
        df = (p - 1) * pow(x, p - 2, pm) % pm
        x = (x - f * mod_inv(df, pm)) % pm
    return x


def oracle_valuation(p, k, m=4):
    big = p ** (m + 1)
    s = sum(pow(hensel_teichmuller(a, p, m + 1), k - 1, big) * a for a in range(1, p)) % big
    assert s % p == 0
    v, x = 0, s // p
    while v < m and x % p == 0:
        x //= p
        v += 1
    return v


@pytest.mark.parametrize("p, k, m, v", [(5, 2, 1, 0), (37, 32, 2, 1), (37, 2, 1, 0)])
def test_gen_bernoulli_examples(p, k, m, v):
    g = gen_bernoulli_B1(p, k, m)
    assert g.valuation == v
    assert g.exhausted is (v >= m)
    assert oracle_valuation(p, k) == v or v == m


def test_gen_bernoulli_regression_values():
    assert gen_bernoulli_B1(37, 32, 2).value == 851
    assert gen_bernoulli_B1(691, 12, 2).value == 71864


def test_gen_bernoulli_congruence_with_bk_over_k():
    for p in primes_between(5, 300):
        table = bernoulli_even_mod_p(p).values
        irr = set(irregular_indices(p))
        for k in range(2, p - 2, 2):
            g = gen_bernoulli_B1(p, k, 1)
            assert g.value == table[k] * mod_inv(k, p) % p
            assert (g.valuation >= 1) == (k in irr)


def test_gen_bernoulli_rejects_bad_index():
    with pytest.raises(ValueError):
        gen_bernoulli_B1(37, 3, 2)
    with pytest.raises(ValueError):
        gen_bernoulli_B1(37, 36, 2)


@pytest.mark.parametrize("p, k", [(37, 32), (59, 44), (691, 12), (157, 62), (157, 110)])
def test_eigenspace_exponent(p, k):
    assert eigenspace_exponent(p, k) == 1
    assert oracle_valuation(p, k) == 1


def test_precision_cap():
    with pytest.raises(PrecisionExhausted):
        eigenspace_exponent(37, 32, precision_cap=1)
    with pytest.raises(PrecisionExhausted):
        gen_bernoulli_B1(37, 32, 40)


def test_irregular_pairs():
    pairs = irregular_pairs(157)
    assert [(x.k, x.e) for x in pairs] == [(62, 1), (110, 1)]
