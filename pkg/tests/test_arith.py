import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vanlab.arith import (
    NotInvertible,
    fp_rank,
    is_prime,
    mod_inv,
    mod_pow,
    prime_factors,
    primes_between,
    primitive_root,
    teich_char,
)


def trial_division(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def brute_order(g, p):
    x, k = g % p, 1
    while x != 1:
        x = x * g % p
        k += 1
    return k


@pytest.mark.parametrize("n, expected", [(2, True), (1889, True), (119, False), (0, False), (1, False)])
def test_is_prime_examples(n, expected):
    assert is_prime(n) is expected


def test_is_prime_matches_trial_division():
    assert [n for n in range(20000) if is_prime(n)] == [n for n in range(20000) if trial_division(n)]


@pytest.mark.parametrize(
    "n, expected",
    [
        (3215031751, False),  # strong pseudoprime to bases 2, 3, 5, 7
        (3825123056546413051, False),  # strong pseudoprime to bases up to 23
        (2**61 - 1, True),
        (2**64 - 59, True),
        ((2**32 - 5) * (2**32 - 17), False),
    ],
)
def test_is_prime_64bit(n, expected):
    assert is_prime(n) is expected


def test_mod_pow_examples():
    assert mod_pow(2, 5, 25) == 7
    assert mod_pow(12345, 0, 97) == 1
    assert mod_pow(3, 6, 7) == 1


@given(st.integers(0, 2**64), st.integers(0, 2**20), st.integers(2, 2**64))
def test_mod_pow_matches_builtin(b, e, m):
    assert mod_pow(b, e, m) == pow(b, e, m)


def test_mod_inv_examples():
    assert mod_inv(6, 5) == 1
    assert mod_inv(2, 7) == 4
    assert mod_inv(30, 7) == 4
    with pytest.raises(NotInvertible):
        mod_inv(6, 9)


def test_mod_inv_random_pairs():
    rng = random.Random(1)
    done = 0
    while done < 1000:
        m = rng.randrange(2, 2**64)
        a = rng.randrange(1, m)
        try:
            inv = mod_inv(a, m)
        except NotInvertible:
            continue
        assert a * inv % m == 1
        done += 1


@pytest.mark.parametrize("p, g", [(5, 2), (7, 3), (3, 2), (23, 5), (191, 19)])
def test_primitive_root_examples(p, g):
    assert primitive_root(p) == g


def test_primitive_root_is_smallest_generator():
    for p in primes_between(3, 600):
        g = primitive_root(p)
        assert brute_order(g, p) == p - 1
        assert all(brute_order(h, p) < p - 1 for h in range(2, g))
        assert all(pow(g, (p - 1) // q, p) != 1 for q in prime_factors(p - 1))


def test_teich_char_examples():
    assert teich_char(1, 11, 3) == 1
    assert teich_char(2, 5, 2) == 7
    for p in (5, 7, 101):
        assert teich_char(p - 1, p, 2) == p * p - 1


def test_teich_char_properties():
    for p in primes_between(3, 100):
        for m in (1, 2, 3):
            pm = p**m
            for a in range(1, p):
                w = teich_char(a, p, m)
                assert w % p == a
                assert pow(w, p - 1, pm) == 1


def brute_rank(rows, p):
    """log_p of the size of the row span, by enumeration."""
    span = {tuple([0] * len(rows[0]))}
    for r in rows:
        span = {tuple((s + c * x) % p for s, x in zip(v, r)) for v in span for c in range(p)}
    n, k = len(span), 0
    while n > 1:
        n //= p
        k += 1
    return k


def test_fp_rank_examples():
    assert fp_rank(np.zeros((3, 4), dtype=int), 7) == 0
    assert fp_rank(np.eye(5, dtype=int), 11) == 5
    assert fp_rank([[1, 2], [2, 4]], 5) == 1
    assert fp_rank(np.zeros((0, 4), dtype=int), 5) == 0


def test_fp_rank_does_not_modify_input():
    m = np.array([[2, 4, 1], [1, 2, 3]])
    before = m.copy()
    fp_rank(m, 5)
    assert (m == before).all()


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.integers(1, 4), st.integers(1, 4), st.randoms())
def test_fp_rank_matches_span_enumeration(p, rows, cols, rnd):
    m = [[rnd.randrange(p) for _ in range(cols)] for _ in range(rows)]
    assert fp_rank(m, p) == brute_rank(m, p)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([3, 7, 31, 101]), st.integers(1, 8), st.integers(1, 8), st.randoms())
def test_fp_rank_row_permutation_and_scaling(p, rows, cols, rnd):
    m = [[rnd.randrange(p) for _ in range(cols)] for _ in range(rows)]
    perm = list(range(rows))
    rnd.shuffle(perm)
    scaled = [[x * s % p for x in m[i]] for i, s in zip(perm, [rnd.randrange(1, p) for _ in perm])]
    assert fp_rank(scaled, p) == fp_rank(m, p)


def test_primes_between():
    assert primes_between(3, 30) == [3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert len(primes_between(3, 200)) == 45
