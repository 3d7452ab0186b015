from fractions import Fraction

import pytest

from m2z.primes import factor, is_prime, primes_up_to, valuation


def test_is_prime_small():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_primes_up_to_matches_is_prime():
    assert primes_up_to(100) == [n for n in range(101) if is_prime(n)]
    assert primes_up_to(1) == []


def test_factor():
    assert factor(1) == {}
    assert factor(360) == {2: 3, 3: 2, 5: 1}
    with pytest.raises(ValueError):
        factor(0)


def test_factor_reassembles():
    for n in range(1, 500):
        product = 1
        for p, e in factor(n).items():
            assert is_prime(p)
            product *= p**e
        assert product == n


def test_valuation():
    assert valuation(48, 2) == 4
    assert valuation(-48, 2) == 4
    assert valuation(Fraction(3, 8), 2) == -3
    assert valuation(Fraction(9, 5), 3) == 2
    with pytest.raises(ValueError):
        valuation(0, 2)
