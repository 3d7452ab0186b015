"""Walk through the class arithmetic: canonical forms, divisibility, the
lattice operations, and the multiplicative hyper-distance."""

from m2z import (
    CharacterSpec,
    IntMatrix2,
    MatrixClass,
    apply_automorphism,
    divides,
    hnf,
    hyper_distance,
    join,
    level,
    meet,
    niveau,
    primitive_decompose,
    quotient,
)

m = IntMatrix2(10, 4, 6, 8)
cls = hnf(m)
print(f"the class of [[10, 4], [6, 8]] has canonical form [[{cls.a}, {cls.b}], [0, {cls.d}]]")
print(f"  det preserved: |det m| = {abs(m.det())} = {cls.det}")
print(f"  content {cls.content}, level at 2: {level(cls, 2)}, niveau at 2: {niveau(cls, 2)}")

n, q = primitive_decompose(cls)
print(f"  unique factorization: {n} * primitive [[{q.a}, {q.b}], [0, {q.d}]]")

x = MatrixClass(4, 0, 1)
y = MatrixClass(2, 1, 3)
w = meet(x, y)
j = join(x, y)
print(f"\nmeet of {x} and {y} is {w}; join is {j}")
print(f"  meet divides both: {divides(w, x)}, {divides(w, y)}")
print(f"  both divide join:  {divides(x, j)}, {divides(y, j)}")
print(f"  quotient join/x = {quotient(x, j)}")

d = hyper_distance(x, y)
print(f"\nhyper-distance between {x} and {y} is {d}")
print(f"  = det(x/meet) * det(y/meet) = {quotient(w, x).det()} * {quotient(w, y).det()}")

chi = CharacterSpec(sign_at_prime={2: -1})
g = IntMatrix2(1, 1, 0, 1)
m2 = IntMatrix2(2, 0, 0, 1)
print(f"\ntwisted conjugation with chi(2) = -1, g = [[1,1],[0,1]]:")
print(f"  {m2} -> {apply_automorphism(m2, chi, g)}   (determinant {m2.det()} preserved)")
