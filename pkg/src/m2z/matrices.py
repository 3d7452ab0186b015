"""Exact arithmetic on nonsingular 2x2 integer matrices and their classes.

A *class* is an orbit under left multiplication by GL2(Z).  Every orbit of a
nonsingular integer matrix contains exactly one upper-triangular
representative

    [[a, b],
     [0, d]]       with  a >= 1,  d >= 1,  0 <= b < d,

and :class:`MatrixClass` stores that representative, so class equality is
plain field equality.  On top of the canonical form this module provides the
divisibility order (x <= y when y = m*x for an integer matrix m), its meet
and join, the level/niveau invariants, the unique scalar-times-primitive
decomposition, the multiplicative hyper-distance, and the determinant-twisted
conjugation automorphisms.

All values are immutable, all operations are pure functions on unbounded
integers; the module is safe for unrestricted concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterator, Mapping

from .errors import NotDivisible, NotUnimodular, SingularMatrix
from .primes import valuation

__all__ = [
    "IntMatrix2",
    "MatrixClass",
    "CharacterSpec",
    "hnf",
    "divides",
    "quotient",
    "meet",
    "join",
    "level",
    "niveau",
    "primitive_decompose",
    "hyper_distance",
    "apply_automorphism",
    "classes_with_det",
    "parse_matrix",
]


@dataclass(frozen=True)
class IntMatrix2:
    """A 2x2 integer matrix; plain data plus the handful of ops we need."""

    a11: int
    a12: int
    a21: int
    a22: int

    @classmethod
    def identity(cls) -> "IntMatrix2":
        return cls(1, 0, 0, 1)

    def det(self) -> int:
        return self.a11 * self.a22 - self.a12 * self.a21

    def adjugate(self) -> "IntMatrix2":
        return IntMatrix2(self.a22, -self.a12, -self.a21, self.a11)

    def scale(self, c: int) -> "IntMatrix2":
        return IntMatrix2(c * self.a11, c * self.a12, c * self.a21, c * self.a22)

    def __matmul__(self, other: "IntMatrix2") -> "IntMatrix2":
        return IntMatrix2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a11, self.a12), (self.a21, self.a22))

    def __str__(self) -> str:
        return f"{self.a11},{self.a12};{self.a21},{self.a22}"


@dataclass(frozen=True)
class MatrixClass:
    """Canonical representative [[a, b], [0, d]] of a left-GL2(Z) class."""

    a: int
    b: int
    d: int

    def __post_init__(self):
        if self.a < 1 or self.d < 1:
            raise ValueError(f"diagonal must be positive, got a={self.a}, d={self.d}")
        if not 0 <= self.b < self.d:
            raise ValueError(f"need 0 <= b < d, got b={self.b}, d={self.d}")

    @property
    def det(self) -> int:
        return self.a * self.d

    @property
    def content(self) -> int:
        """gcd of the entries (the largest scalar dividing the class)."""
        return gcd(self.a, self.b, self.d)

    @property
    def is_primitive(self) -> bool:
        return self.content == 1

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (0, self.d))

    def to_matrix(self) -> IntMatrix2:
        return IntMatrix2(self.a, self.b, 0, self.d)

    def __str__(self) -> str:
        return f"{self.a},{self.b};0,{self.d}"


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    # returns (g, x, y) with x*a + y*b == g and g >= 0
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def _hnf_rows(rows) -> tuple[int, int, int]:
    """Canonical (a, b, d) of the full-rank row lattice spanned by ``rows``.

    Folds each row into two pivot rows (a, b) and (0, d) by unimodular
    operations, then normalizes signs and reduces b mod d.
    """
    a = b = d = 0
    for x, y in rows:
        if x:
            if a == 0:
                a, b = x, y
                y = 0
            else:
                g, s, t = _xgcd(a, x)
                # new pivot s*(a,b) + t*(x,y); the leftover combination
                # (a/g)*(x,y) - (x/g)*(a,b) has first entry 0
                leftover = (a // g) * y - (x // g) * b
                a, b = g, s * b + t * y
                y = leftover
        if y:
            d = gcd(d, y)
    if a == 0 or d == 0:
        raise SingularMatrix("rows do not span a rank-2 lattice")
    if a < 0:
        a, b = -a, -b
    b %= d
    return a, b, d


def hnf(m: IntMatrix2) -> MatrixClass:
    """The canonical class representative of a nonsingular integer matrix.

    Raises SingularMatrix when det(m) = 0.
    """
    if m.det() == 0:
        raise SingularMatrix(f"det({m}) = 0")
    return MatrixClass(*_hnf_rows(m.rows()))


def divides(x: MatrixClass, y: MatrixClass) -> bool:
    """True iff y = m*x for some integer matrix m (iff y*x^-1 is integral)."""
    if y.a % x.a or y.d % x.d:
        return False
    return (x.a * y.b - y.a * x.b) % (x.a * x.d) == 0


def quotient(x: MatrixClass, y: MatrixClass) -> IntMatrix2:
    """The unique m with m * rep(x) = rep(y); det(m) = det(y)/det(x).

    Returned as the exact matrix product y*x^-1 cleared to integers, not
    re-canonicalized, so determinant bookkeeping stays exact.
    """
    if not divides(x, y):
        raise NotDivisible(f"{x} does not divide {y}")
    return IntMatrix2(
        y.a // x.a,
        (x.a * y.b - y.a * x.b) // (x.a * x.d),
        0,
        y.d // x.d,
    )


def meet(x: MatrixClass, y: MatrixClass) -> MatrixClass:
    """Greatest lower bound: the class of the row-lattice sum L_x + L_y."""
    return MatrixClass(*_hnf_rows(x.rows() + y.rows()))


def _exact_div(n: int, d: int) -> int:
    q, r = divmod(n, d)
    if r:
        raise AssertionError(f"non-exact division {n}/{d} in lattice duality")
    return q


def join(x: MatrixClass, y: MatrixClass) -> MatrixClass:
    """Least upper bound: the class of the row-lattice intersection.

    Computed by duality: the dual of the row lattice of X is spanned by the
    rows of adj(X)^T / det(X), the dual of an intersection is the sum of the
    duals, and integral lattices come back integral after dualizing twice.
    """
    dx, dy = x.det, y.det
    dual_rows = [
        (dy * x.d, 0),
        (-dy * x.b, dy * x.a),
        (dx * y.d, 0),
        (-dx * y.b, dx * y.a),
    ]
    sa, sb, sd = _hnf_rows(dual_rows)
    ds = sa * sd
    scale = dx * dy
    w_rows = [
        (_exact_div(scale * sd, ds), 0),
        (_exact_div(-scale * sb, ds), _exact_div(scale * sa, ds)),
    ]
    return MatrixClass(*_hnf_rows(w_rows))


def level(m: MatrixClass, p: int) -> int:
    """lambda_p(m): the p-adic valuation of the gcd of the entries."""
    return valuation(m.content, p)


def niveau(m: MatrixClass, p: int) -> int:
    """nu_p(m) = v_p(det m) - 2*lambda_p(m); always >= 0."""
    return valuation(m.det, p) - 2 * level(m, p)


def primitive_decompose(m: MatrixClass) -> tuple[int, MatrixClass]:
    """The unique factorization m = n * q with q primitive (coprime entries)."""
    n = m.content
    return n, MatrixClass(m.a // n, m.b // n, m.d // n)


def hyper_distance(x: MatrixClass, y: MatrixClass) -> int:
    """det(x') * det(y') where x = x'*w, y = y'*w and w = meet(x, y).

    Symmetric, equals 1 iff x = y, and its log is the weighted path metric on
    the class graph whose edges are prime determinant jumps.
    """
    w = meet(x, y)
    return quotient(w, x).det() * quotient(w, y).det()


@dataclass(frozen=True)
class CharacterSpec:
    """A character chi: Q^x -> {1, -1}, determined by chi(-1) and chi(p).

    Primes absent from ``sign_at_prime`` have chi(p) = +1.
    """

    sign_at_minus_one: int = 1
    sign_at_prime: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.sign_at_minus_one not in (1, -1):
            raise ValueError("chi(-1) must be +1 or -1")
        for p, s in self.sign_at_prime.items():
            if s not in (1, -1):
                raise ValueError(f"chi({p}) must be +1 or -1")

    def value(self, r: int | Fraction) -> int:
        if r == 0:
            raise ValueError("characters of Q^x are undefined at 0")
        sign = self.sign_at_minus_one if r < 0 else 1
        for p, s in self.sign_at_prime.items():
            if s == -1 and valuation(r, p) % 2:
                sign = -sign
        return sign


def apply_automorphism(m: IntMatrix2, chi: CharacterSpec, g: IntMatrix2) -> IntMatrix2:
    """chi(det m) * g * m * g^-1 for unimodular g; integral, det-preserving."""
    dg = g.det()
    if dg not in (1, -1):
        raise NotUnimodular(f"det({g}) = {dg}")
    if m.det() == 0:
        raise SingularMatrix(f"det({m}) = 0")
    g_inv = g.adjugate().scale(dg)  # adj(g)/det(g) with det(g)^2 = 1
    return (g @ m @ g_inv).scale(chi.value(m.det()))


def classes_with_det(n: int) -> Iterator[MatrixClass]:
    """All classes of determinant n, in (a, b) order."""
    if n < 1:
        raise ValueError(f"determinant must be positive, got {n}")
    for a in range(1, n + 1):
        if n % a:
            continue
        d = n // a
        for b in range(d):
            yield MatrixClass(a, b, d)


def parse_matrix(text: str) -> IntMatrix2:
    """Parse the literal "a11,a12;a21,a22" (integers, semicolon rows)."""
    rows = text.split(";")
    if len(rows) != 2:
        raise ValueError(f"expected two ';'-separated rows in {text!r}")
    entries = []
    for row in rows:
        parts = row.split(",")
        if len(parts) != 2:
            raise ValueError(f"expected two ','-separated entries in {row!r}")
        for part in parts:
            entries.append(int(part.strip()))
    return IntMatrix2(*entries)
