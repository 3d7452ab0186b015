"""Balls in the big picture: the embedding, the two distance routes, and
DOT export of the radius-4 neighborhood of the origin."""

from collections import Counter
from fractions import Fraction

from m2z import BigPictureVertex, ball, bp_leq, delta, delta_direct, embed, export_dot

one = BigPictureVertex.of(1)
v = BigPictureVertex.of(Fraction(3, 2), Fraction(1, 2))
print(f"the vertex {v} embeds as the primitive class {embed(v)}")
print(f"delta to the origin: {delta(one, v)} (alpha route agrees: {delta_direct(one, v)})")
print(f"order: 1 <= v is {bp_leq(one, v)}, v <= 1 is {bp_leq(v, one)}")

g = ball(one, 8)
print(f"\nball of radius 8 around the origin: {len(g.vertices)} vertices, {len(g.edges)} edges")
by_distance = Counter(delta(one, w) for w in g.vertices)
print("vertices by exact distance (these are the primitive-class counts psi):")
for n in sorted(by_distance):
    print(f"  distance {n}: {by_distance[n]}")

print("\nDOT text of the radius-4 ball:")
print(export_dot(ball(one, 4)))
