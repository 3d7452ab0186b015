"""Exact Dirichlet coefficients for the three counting series of the monoid.

Counting classes by determinant gives sigma(n) (sum of divisors); counting
primitive classes gives the Dedekind psi function n * prod_{p|n} (1 + 1/p);
the ax+b submonoid has exactly one class per determinant.  Each count is
available twice: as a sieve formula and as an honest enumeration over
canonical representatives, so the two routes check each other coefficient by
coefficient.  Everything is an exact integer; no analytic values anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .errors import LengthMismatch

__all__ = [
    "FULL_MONOID",
    "BIG_PICTURE",
    "AX_PLUS_B",
    "CoefficientTable",
    "sigma_coeffs",
    "psi_coeffs",
    "count_classes_by_det",
    "count_primitive_by_det",
    "axpb_count",
    "square_indicator_coeffs",
    "dirichlet_convolve",
]

FULL_MONOID = "FullMonoid"
BIG_PICTURE = "BigPicture"
AX_PLUS_B = "AxPlusB"


@dataclass(frozen=True)
class CoefficientTable:
    """Coefficients c(1..N) of a Dirichlet series; coeffs[0] is unused (0)."""

    which: str
    coeffs: tuple[int, ...]

    @property
    def n_max(self) -> int:
        return len(self.coeffs) - 1

    def value(self, n: int) -> int:
        if not 1 <= n <= self.n_max:
            raise IndexError(f"n = {n} outside 1..{self.n_max}")
        return self.coeffs[n]


def _check_terms(n: int):
    if n < 1:
        raise ValueError(f"need at least one term, got {n}")


def sigma_coeffs(n_terms: int) -> CoefficientTable:
    """sigma(n) = sum of divisors, by sieve; coefficients of zeta(s)zeta(s-1)."""
    _check_terms(n_terms)
    coeffs = [0] * (n_terms + 1)
    for d in range(1, n_terms + 1):
        for m in range(d, n_terms + 1, d):
            coeffs[m] += d
    return CoefficientTable(FULL_MONOID, tuple(coeffs))


def psi_coeffs(n_terms: int) -> CoefficientTable:
    """psi(n) = n * prod_{p|n} (1 + 1/p), exactly, via a smallest-prime-factor
    sieve; coefficients of zeta(s)zeta(s-1)/zeta(2s)."""
    _check_terms(n_terms)
    spf = list(range(n_terms + 1))
    i = 2
    while i * i <= n_terms:
        if spf[i] == i:
            for j in range(i * i, n_terms + 1, i):
                if spf[j] == j:
                    spf[j] = i
        i += 1
    coeffs = [0] * (n_terms + 1)
    if n_terms >= 1:
        coeffs[1] = 1
    for n in range(2, n_terms + 1):
        p = spf[n]
        m = n // p
        coeffs[n] = coeffs[m] * p if m % p == 0 else coeffs[m] * (p + 1)
    return CoefficientTable(BIG_PICTURE, tuple(coeffs))


def count_classes_by_det(n_terms: int) -> CoefficientTable:
    """Number of classes of each determinant, by enumerating the canonical
    triples (a, d, b): a*d = n and 0 <= b < d."""
    _check_terms(n_terms)
    coeffs = [0] * (n_terms + 1)
    for a in range(1, n_terms + 1):
        for d in range(1, n_terms // a + 1):
            coeffs[a * d] += d  # d choices of b
    return CoefficientTable(FULL_MONOID, tuple(coeffs))


def count_primitive_by_det(n_terms: int) -> CoefficientTable:
    """Number of primitive classes (coprime entries) of each determinant, by
    enumeration with a content check on every representative."""
    _check_terms(n_terms)
    coeffs = [0] * (n_terms + 1)
    for a in range(1, n_terms + 1):
        for d in range(1, n_terms // a + 1):
            g = gcd(a, d)
            if g == 1:
                coeffs[a * d] += d  # every b gives content gcd(1, b) = 1
            else:
                coeffs[a * d] += sum(1 for b in range(d) if gcd(g, b) == 1)
    return CoefficientTable(BIG_PICTURE, tuple(coeffs))


def axpb_count(n_terms: int) -> CoefficientTable:
    """One class per determinant: the representatives are diag(n, 1)."""
    _check_terms(n_terms)
    return CoefficientTable(AX_PLUS_B, tuple([0] + [1] * n_terms))


def square_indicator_coeffs(n_terms: int) -> CoefficientTable:
    """1 at perfect squares, else 0: the coefficients of zeta(2s)."""
    _check_terms(n_terms)
    coeffs = [0] * (n_terms + 1)
    for i in range(1, isqrt(n_terms) + 1):
        coeffs[i * i] = 1
    return CoefficientTable("SquareIndicator", tuple(coeffs))


def dirichlet_convolve(x: CoefficientTable, y: CoefficientTable) -> CoefficientTable:
    """(x * y)(n) = sum over d | n of x(d) * y(n/d)."""
    if x.n_max != y.n_max:
        raise LengthMismatch(f"tables have {x.n_max} and {y.n_max} terms")
    n = x.n_max
    coeffs = [0] * (n + 1)
    for d in range(1, n + 1):
        xd = x.coeffs[d]
        if xd == 0:
            continue
        for m in range(d, n + 1, d):
            coeffs[m] += xd * y.coeffs[m // d]
    return CoefficientTable(f"{x.which}*{y.which}", tuple(coeffs))
