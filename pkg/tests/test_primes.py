import math

import pytest

from davenport.primes import (PrimeCache, check_q_growth, is_prime,
                              largest_prime_leq, q_of, q_of_oracle)


def test_q_examples():
    assert q_of(2) == 3
    assert q_of(6) == 5
    assert q_of(30) == 7
    assert q_of(210) == 11


def test_q_against_oracle_small():
    for m in range(2, 5000):
        assert q_of(m) == q_of_oracle(m)


def test_q_invariants():
    cache = PrimeCache(10_000)
    for m in range(2, 2000):
        q = q_of(m)
        assert m % q != 0
        prod = 1
        for p in range(2, q):
            if cache.is_prime(p):
                assert m % p == 0
                prod *= p
        assert m % prod == 0


def test_largest_prime_leq():
    assert largest_prime_leq(15) == 13
    assert largest_prime_leq(2) == 2
    assert largest_prime_leq(29) == 29
    with pytest.raises(ValueError):
        largest_prime_leq(1)


def test_is_prime_beyond_sieve():
    cache = PrimeCache(100)
    assert cache.is_prime(101)
    assert cache.is_prime(104729)
    assert not cache.is_prime(104730)


def test_q_growth_small():
    rep = check_q_growth(10)
    assert rep.ok and rep.first_violation is None
    # q(3) = 2 < 3 and 2 <= 1 + 4 ln 3
    assert q_of(3) == 2 and 2 <= 1 + 4 * math.log(3)


def test_q_growth_range():
    rep = check_q_growth(20000)
    assert rep.ok
    assert rep.max_ratio < 1.0
