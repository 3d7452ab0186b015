"""Extensions of Q by Z as supernatural data: membership, the projective
action, orbit decisions, and the repunit coincidence behind the one known
two-prime identity."""

from fractions import Fraction

from m2z import (
    Equivalent,
    ExtMatrix,
    MoebiusMatrix,
    ONE,
    ZERO_EVERYWHERE,
    equiv_decide,
    ext_membership,
    goormaghtigh_search,
    goormaghtigh_witness,
    is_extension,
    moebius_apply,
    multiply,
    p_infinity,
    s_of,
)

z = multiply(s_of(400), p_infinity(3))
print(f"s(400) * 3^inf = {z}")
x = ExtMatrix(ONE, z, ZERO_EVERYWHERE)
print(f"(1, {z}; 0, 0) is an extension of Q by Z: {is_extension(x)}")
print(f"  (-1/3, 1/3) in the subgroup? {ext_membership(ExtMatrix(ONE, s_of(2), ZERO_EVERYWHERE), Fraction(-1, 3), Fraction(1, 3))}")
print(f"  ( 1/3, 1/3) in the subgroup? {ext_membership(ExtMatrix(ONE, s_of(2), ZERO_EVERYWHERE), Fraction(1, 3), Fraction(1, 3))}")

print("\norbit decisions (isomorphism of the extensions as abstract groups):")
for a, b in ((s_of(2), s_of(8)), (s_of(6), s_of(12)), (s_of(2), s_of(3))):
    verdict = equiv_decide(a, b)
    if isinstance(verdict, Equivalent):
        print(f"  {a} ~ {b}: witness {verdict.witness}")
    else:
        print(f"  {a} vs {b}: {verdict}")

g = MoebiusMatrix(31, 0, -1, 30)
print(f"\nthe map z -> 30z/(31 - z) sends {z} to {moebius_apply(g, z)}")
print("that single matrix works for every padding prime l:")
for l in (3, 7, 11):
    witness = goormaghtigh_witness(2, 4, 5, 2, l)
    print(f"  l = {l}: witness {witness}")

print("\nshifting both exponents at two primes needs a repunit coincidence;")
print("the search below 10^7 finds exactly the classical pair:")
for x_, y_, n_, m_, value in goormaghtigh_search(10**7):
    print(f"  ({x_}^{n_}-1)/({x_}-1) = ({y_}^{m_}-1)/({y_}-1) = {value}")
print(f"hence no witness for the (2,1),(3,1) shift: {goormaghtigh_witness(2, 1, 3, 1, 5)}")
