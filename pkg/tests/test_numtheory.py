from math import gcd

import pytest
from hypothesis import given, strategies as st

from pauligraph.numtheory import (
    FactoredInteger,
    euler_phi,
    factorize,
    gcd_all,
    hyperbolic_counts,
    is_prime,
    is_squarefree,
    jordan_j2,
    local_dimension,
    p_valuation,
    psi,
    sigma,
    sp2_order,
)

from conftest import brute_j2, brute_phi, brute_sigma


@pytest.mark.parametrize("q,expected", [(12, {2: 2, 3: 1}), (1, {}), (24, {2: 3, 3: 1}), (97, {97: 1})])
def test_factorize_examples(q, expected):
    assert factorize(q).as_dict() == expected


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        factorize(0)
    with pytest.raises(ValueError):
        factorize(-3)


@given(st.integers(1, 10**9))
def test_factorize_reconstructs(q):
    f = factorize(q)
    prod = 1
    for p, s in f.factors:
        assert is_prime(p) and s >= 1
        prod *= p**s
    assert prod == q
    assert list(f.primes) == sorted(set(f.primes))


def test_factored_integer_validates():
    with pytest.raises(ValueError):
        FactoredInteger(12, ((2, 1), (3, 1)))
    with pytest.raises(ValueError):
        FactoredInteger(12, ((3, 1), (2, 2)))


def test_bigint_no_overflow():
    q = 2**80 * 3**5
    assert factorize(q).as_dict() == {2: 80, 3: 5}
    assert sigma(q) == (2**81 - 1) * (3**6 - 1) // 2


@pytest.mark.parametrize(
    "q,s,p",
    [(4, 7, 6), (8, 15, 12), (9, 13, 12), (12, 28, 24), (16, 31, 24), (18, 39, 36), (1, 1, 1), (6, 12, 12)],
)
def test_sigma_psi_table(q, s, p):
    assert sigma(q) == s
    assert psi(q) == p


def test_phi_j2_examples():
    assert euler_phi(4) == 2 and euler_phi(1) == 1
    assert jordan_j2(4) == 12 and jordan_j2(2) == 3 and jordan_j2(1) == 1


def test_against_brute_force_oracles():
    for q in range(1, 301):
        assert sigma(q) == brute_sigma(q)
        assert euler_phi(q) == brute_phi(q)
    for q in range(1, 61):
        assert jordan_j2(q) == brute_j2(q)


coprime_pairs = st.tuples(st.integers(1, 3000), st.integers(1, 3000)).filter(lambda t: gcd(*t) == 1)


@given(coprime_pairs)
def test_multiplicative(ab):
    a, b = ab
    for fn in (sigma, psi, euler_phi, jordan_j2):
        assert fn(a * b) == fn(a) * fn(b)


@given(st.integers(1, 5000))
def test_identities(q):
    assert jordan_j2(q) == euler_phi(q) * psi(q)
    assert (psi(q) == sigma(q)) == is_squarefree(q)
    assert psi(q) <= sigma(q)


def test_p_valuation():
    assert p_valuation(2, 4, 8) == 2
    assert p_valuation(2, 0, 8) == 3
    assert p_valuation(3, 5, 9) == 0
    with pytest.raises(ValueError):
        p_valuation(5, 1, 12)


def test_local_dimension():
    assert local_dimension(4, (1, 1)) == 1
    assert local_dimension(4, (0, 2)) == 2
    assert local_dimension(12, (6, 6)) == 6
    assert local_dimension(12, (2, 6)) == 2
    assert local_dimension(12, (6, 0)) == 6
    with pytest.raises(ValueError):
        local_dimension(4, (0, 0))


def _sp2_brute(q):
    n = 0
    for a in range(q):
        for b in range(q):
            for c in range(q):
                for d in range(q):
                    if (a * d - b * c) % q == 1:
                        n += 1
    return n


@pytest.mark.parametrize("q", [2, 3, 4, 5, 6, 8, 9, 10, 12])
def test_sp2_order_brute(q):
    assert sp2_order(q) == _sp2_brute(q)


def test_sp2_examples():
    assert sp2_order(4) == 48


def test_hyperbolic_counts():
    assert hyperbolic_counts(2, 2) == (9, 6)
    assert hyperbolic_counts(3, 2) == (16, 8)
    assert hyperbolic_counts(2, 1)[0] == 2


def test_gcd_all():
    assert gcd_all(4, 6, 8) == 2
    assert gcd_all(0, 0, 5) == 5
