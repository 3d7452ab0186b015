"""Small exact number-theory helpers: primality, sieves, factoring, valuations.

Everything here is trial-division scale; inputs throughout the library are
small by construction (matrix entries, literal exponents), so no sublinear
factoring is needed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_up_to(n: int) -> list[int]:
    """All primes <= n, ascending (simple sieve)."""
    if n < 2:
        return []
    mark = bytearray([1]) * (n + 1)
    mark[0] = mark[1] = 0
    i = 2
    while i * i <= n:
        if mark[i]:
            mark[i * i :: i] = bytes(len(range(i * i, n + 1, i)))
        i += 1
    return [i for i in range(2, n + 1) if mark[i]]


def factor(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {p: exponent}."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    while n % 2 == 0:
        out[2] = out.get(2, 0) + 1
        n //= 2
    p = 3
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def valuation(x: int | Fraction, p: int) -> int:
    """p-adic valuation of a nonzero integer or fraction (may be negative)."""
    if x == 0:
        raise ValueError("valuation of zero is infinite")
    if isinstance(x, Fraction):
        return valuation(x.numerator, p) - valuation(x.denominator, p)
    x = abs(x)
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v
