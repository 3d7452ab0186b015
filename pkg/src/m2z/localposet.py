"""Per-prime structure of matrix classes over the p-adic integers.

For a fixed prime p the classes are triples (p^k, z; 0, p^l) with
0 <= z < p^l; the exponents may also be infinite (with p^inf = 0), which is
how zero-determinant classes are written.  Finite classes form a graded
poset: moving up one edge multiplies the determinant by p, and the local
census sorts every class into one of four types by whether its level and
niveau vanish.

Infinite-l classes cannot store an exact z, so they carry the number of
known p-adic digits instead; they exist for display and sanity checks only,
and neighbor enumeration is defined just for finite classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import total_ordering
from typing import Iterator

from .errors import PrimeMismatch
from .matrices import MatrixClass
from .primes import is_prime, valuation

__all__ = [
    "ExtNat",
    "INFINITY",
    "LocalClass",
    "LocalType",
    "localize",
    "local_leq",
    "upward_neighbors",
    "downward_neighbors",
    "classify",
    "classes_with_det_valuation",
    "local_class_count",
]


@total_ordering
class ExtNat:
    """A natural number extended with a maximal element (printed "inf").

    Addition saturates: inf + x = inf.
    """

    __slots__ = ("value",)

    def __init__(self, value: int | None):
        if value is not None and (not isinstance(value, int) or value < 0):
            raise ValueError(f"ExtNat needs a nonnegative integer or None, got {value!r}")
        object.__setattr__(self, "value", value)

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = ExtNat(other)
        if not isinstance(other, ExtNat):
            return NotImplemented
        return self.value == other.value

    def __lt__(self, other) -> bool:
        if isinstance(other, int):
            other = ExtNat(other)
        if not isinstance(other, ExtNat):
            return NotImplemented
        if self.value is None:
            return False
        if other.value is None:
            return True
        return self.value < other.value

    def __add__(self, other) -> "ExtNat":
        if isinstance(other, int):
            other = ExtNat(other)
        if not isinstance(other, ExtNat):
            return NotImplemented
        if self.value is None or other.value is None:
            return INFINITY
        return ExtNat(self.value + other.value)

    __radd__ = __add__

    def __hash__(self) -> int:
        return hash(("ExtNat", self.value))

    def __int__(self) -> int:
        if self.value is None:
            raise ValueError("infinite ExtNat has no integer value")
        return self.value

    def __str__(self) -> str:
        return "inf" if self.value is None else str(self.value)

    def __repr__(self) -> str:
        return f"ExtNat({self})"


INFINITY = ExtNat(None)


def _as_extnat(x) -> ExtNat:
    return x if isinstance(x, ExtNat) else ExtNat(x)


class LocalType(Enum):
    """The four census cells: (level zero?, niveau zero?)."""

    ZERO_ZERO = "ZeroZero"
    ZERO_POS = "ZeroPos"
    POS_ZERO = "PosZero"
    POS_POS = "PosPos"


@dataclass(frozen=True)
class LocalClass:
    """The class of (p^k, z; 0, p^l) over the p-adic integers.

    Finite l: 0 <= z < p^l and the representative is unique.
    l = inf with k finite: z is a truncation carrying ``z_digits`` known
    p-adic digits.  k = inf: the representative is (0, 0; 0, p^l), so z = 0.
    """

    p: int
    k: ExtNat
    l: ExtNat
    z: int = 0
    z_digits: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "k", _as_extnat(self.k))
        object.__setattr__(self, "l", _as_extnat(self.l))
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.z < 0:
            raise ValueError("z must be nonnegative")
        if not self.k.is_finite:
            if self.z != 0 or self.z_digits is not None:
                raise ValueError("k = inf forces the representative (0,0;0,p^l) with z = 0")
        elif self.l.is_finite:
            if self.z_digits is not None:
                raise ValueError("finite classes carry no digit tag")
            if self.z >= self.p ** int(self.l):
                raise ValueError(f"need z < p^l = {self.p ** int(self.l)}, got z={self.z}")
        else:
            if self.z_digits is None or self.z_digits < 0:
                raise ValueError("l = inf needs a nonnegative z_digits tag")
            if self.z >= self.p ** self.z_digits:
                raise ValueError("z exceeds its declared digit count")

    @property
    def is_finite(self) -> bool:
        return self.k.is_finite and self.l.is_finite

    def det_valuation(self) -> ExtNat:
        return self.k + self.l

    def level(self) -> ExtNat:
        """Largest t with p^t dividing all entries (from known digits)."""
        if self.z == 0:
            vz = INFINITY if (self.l.is_finite or self.z_digits is None) else ExtNat(self.z_digits)
        else:
            vz = ExtNat(valuation(self.z, self.p))
        return min(self.k, self.l, vz)

    def niveau(self) -> ExtNat:
        if not self.is_finite:
            return INFINITY
        return ExtNat(int(self.k) + int(self.l) - 2 * int(self.level()))

    def eq_at_known_digits(self, other: "LocalClass") -> tuple[bool, int | None]:
        """Compare, truncating both z's to the digits both sides know.

        Returns (equal, digits_used); digits_used is None when both sides are
        exact (finite l or k = inf), in which case the comparison is exact.
        """
        if self.p != other.p:
            raise PrimeMismatch(f"primes {self.p} and {other.p} differ")
        if self.k != other.k or self.l != other.l:
            return False, None
        digits = []
        for c in (self, other):
            if c.l.is_finite:
                digits.append(int(c.l))
            elif c.z_digits is not None:
                digits.append(c.z_digits)
        if not self.k.is_finite or not digits:
            return self.z == other.z, None
        if self.l.is_finite:
            return self.z == other.z, None
        m = min(digits)
        mod = self.p ** m
        return self.z % mod == other.z % mod, m

    def __str__(self) -> str:
        return f"({self.p}^{self.k}, {self.z}; 0, {self.p}^{self.l})"


def localize(m: MatrixClass, p: int) -> LocalClass:
    """The image of a global class in the p-component.

    With representative [[a, b], [0, d]]: k = v_p(a), l = v_p(d), and z is
    b divided by the unit part of a, reduced mod p^l.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    k = valuation(m.a, p)
    l = valuation(m.d, p)
    if l == 0:
        z = 0
    else:
        mod = p**l
        unit = m.a // p**k
        z = (m.b * pow(unit, -1, mod)) % mod
    return LocalClass(p, ExtNat(k), ExtNat(l), z)


def _require_finite(x: LocalClass, what: str):
    if not x.is_finite:
        raise ValueError(f"{what} is only defined for classes of nonzero determinant")


def local_leq(x: LocalClass, y: LocalClass) -> bool:
    """True iff y = m*x for an integral p-adic matrix m.

    Equivalent to x.k <= y.k, x.l <= y.l and y.z == p^(y.k-x.k) * x.z
    mod p^(x.l): dividing out the representative of x leaves exactly the
    congruence at x's own precision.
    """
    if x.p != y.p:
        raise PrimeMismatch(f"primes {x.p} and {y.p} differ")
    _require_finite(x, "local_leq")
    _require_finite(y, "local_leq")
    if x.k > y.k or x.l > y.l:
        return False
    p = x.p
    shift = int(y.k) - int(x.k)
    return (y.z - p**shift * x.z) % p ** int(x.l) == 0


def upward_neighbors(x: LocalClass) -> list[LocalClass]:
    """All y >= x with v_p(det y) = v_p(det x) + 1, sorted by (k, l, z).

    There are always exactly p + 1: the shape (k, l+1) contributes the p
    lifts z + i*p^l, the shape (k+1, l) the single class with z' = p*z mod p^l.
    """
    _require_finite(x, "upward_neighbors")
    p, k, l = x.p, int(x.k), int(x.l)
    out = [LocalClass(p, k, l + 1, x.z + i * p**l) for i in range(p)]
    out.append(LocalClass(p, k + 1, l, (p * x.z) % p**l if l else 0))
    out.sort(key=lambda c: (int(c.k), int(c.l), c.z))
    return out


def downward_neighbors(x: LocalClass) -> list[LocalClass]:
    """All y <= x with v_p(det x) = v_p(det y) + 1, sorted by (k, l, z)."""
    _require_finite(x, "downward_neighbors")
    p, k, l = x.p, int(x.k), int(x.l)
    out = []
    if l >= 1:
        out.append(LocalClass(p, k, l - 1, x.z % p ** (l - 1)))
    if k >= 1:
        if l == 0:
            out.append(LocalClass(p, k - 1, 0, 0))
        elif x.z % p == 0:
            # solutions of p*z' == z mod p^l in [0, p^l)
            out.extend(LocalClass(p, k - 1, l, x.z // p + t * p ** (l - 1)) for t in range(p))
    out.sort(key=lambda c: (int(c.k), int(c.l), c.z))
    return out


def classify(x: LocalClass) -> LocalType:
    """The census cell of x; an infinite niveau counts as positive."""
    lam_pos = x.level() > 0
    nu_pos = x.niveau() > 0
    if lam_pos:
        return LocalType.POS_POS if nu_pos else LocalType.POS_ZERO
    return LocalType.ZERO_POS if nu_pos else LocalType.ZERO_ZERO


def classes_with_det_valuation(p: int, n: int) -> Iterator[LocalClass]:
    """All finite classes with v_p(det) = n, in (k, l, z) order."""
    if n < 0:
        raise ValueError("valuation must be nonnegative")
    for k in range(n + 1):
        l = n - k
        for z in range(p**l):
            yield LocalClass(p, k, l, z)


def local_class_count(p: int, n: int) -> int:
    """Number of finite classes with v_p(det) = n: (p^(n+1) - 1)/(p - 1)."""
    return (p ** (n + 1) - 1) // (p - 1)
