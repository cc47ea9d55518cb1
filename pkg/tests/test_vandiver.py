import pytest

from vanlab.arith import is_primitive_root, primes_between, primitive_root
from vanlab.bernoulli import irregular_indices
from vanlab.vandiver import (
    INCONCLUSIVE,
    WITNESSED,
    check_vandiver,
    eigen_exponents,
    eigen_unit_mod_q,
    find_aux_primes,
    vandiver_witness,
)


def naive_aux_primes(p, count):
    out, q = [], 2
    while len(out) < count:
        if q % p == 1 and all(q % d for d in range(2, int(q**0.5) + 1)):
            out.append(q)
        q += 1
    return out


@pytest.mark.parametrize("p, count, expected", [(37, 1, [149]), (59, 1, [709]), (3, 2, [7, 13])])
def test_find_aux_primes_examples(p, count, expected):
    assert find_aux_primes(p, count) == expected


def test_find_aux_primes_matches_naive_search():
    for p in (5, 37, 157):
        assert find_aux_primes(p, 10) == naive_aux_primes(p, 10)


def test_exponent_sum_condition():
    assert sum(eigen_exponents(37, 32)) % 37 == 0
    for p in primes_between(5, 300):
        for k in range(2, p - 2, 2):
            eigen_exponents(p, k)  # raises on failure


def test_factors_nonzero_mod_q():
    q = 149
    w = pow(primitive_root(q), (q - 1) // 37, q)
    assert all((1 - pow(w, a, q)) % q for a in range(1, 37))


def test_eta_regression_value():
    assert eigen_unit_mod_q(37, 32, 149) == 140


def test_witness_examples():
    v = vandiver_witness(37, 32, 149)
    assert v.status == WITNESSED and v.q == 149
    assert v.eta_power_residue == pow(140, 148 // 37, 149) != 1
    qs = find_aux_primes(59, 10)
    assert any(vandiver_witness(59, 44, q).witnessed for q in qs)


def test_check_vandiver_examples():
    assert check_vandiver(13) == []
    (v,) = check_vandiver(37)
    assert (v.k, v.status, v.q) == (32, WITNESSED, 149)
    assert [(v.k, v.status) for v in check_vandiver(157)] == [(62, WITNESSED), (110, WITNESSED)]


def test_inconclusive_reports_all_tried():
    # find a (p, k, q) that is a p-th power residue, then cap max_aux at that q
    for p in primes_between(37, 400):
        for k in irregular_indices(p):
            qs = find_aux_primes(p, 30)
            for i, q in enumerate(qs):
                if not vandiver_witness(p, k, q).witnessed:
                    assert vandiver_witness(p, k, q).status == INCONCLUSIVE
                    if i == 0:
                        (v,) = [x for x in check_vandiver(p, 1) if x.k == k]
                        assert v.status == INCONCLUSIVE and v.tried == (q,)
                    return
    pytest.skip("no p-th power residue found in range")


def test_verdict_independent_of_primitive_root():
    for p in primes_between(37, 160):
        for k in irregular_indices(p):
            for q in find_aux_primes(p, 5):
                roots = [g for g in range(2, q) if is_primitive_root(g, q)][:4]
                verdicts = {pow(eigen_unit_mod_q(p, k, q, g), (q - 1) // p, q) == 1 for g in roots}
                assert len(verdicts) == 1


def test_all_pairs_up_to_157_witnessed_within_ten():
    for p in primes_between(3, 157):
        for v in check_vandiver(p, 10):
            assert v.witnessed, v
