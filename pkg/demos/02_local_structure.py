"""The per-prime picture: localization, neighbors, and the four-type census."""

from collections import Counter

from m2z import (
    LocalClass,
    MatrixClass,
    classes_with_det_valuation,
    classify,
    downward_neighbors,
    local_class_count,
    localize,
    upward_neighbors,
)

x = MatrixClass(6, 3, 9)
print(f"the class {x} seen one prime at a time:")
for p in (2, 3, 5):
    print(f"  at p = {p}: {localize(x, p)}")

c = LocalClass(2, 0, 1, 1)
print(f"\nneighbors of {c}: determinant gains or loses one factor of 2")
print(f"  upward:   {[str(y) for y in upward_neighbors(c)]}")
print(f"  downward: {[str(y) for y in downward_neighbors(c)]}")

p = 3
print(f"\ncensus at p = {p}: every class is one of four types, and each type")
print("has fixed neighbor counts (up-same, up-raising, down-same, down-lowering):")
rows = {}
for n in range(5):
    for x in classes_with_det_valuation(p, n):
        lam = x.level()
        up = upward_neighbors(x)
        down = downward_neighbors(x)
        up_same = sum(1 for y in up if y.level() == lam)
        down_same = sum(1 for y in down if y.level() == lam)
        counts = (up_same, len(up) - up_same, down_same, len(down) - down_same)
        rows.setdefault(classify(x).value, Counter())[counts] += 1
for kind, counter in sorted(rows.items()):
    for counts, how_many in counter.items():
        print(f"  {kind:9s} -> {counts}   ({how_many} classes with v_3(det) <= 4)")

print("\nclass counts by determinant valuation, against (p^(n+1)-1)/(p-1):")
for n in range(5):
    enumerated = sum(1 for _ in classes_with_det_valuation(p, n))
    print(f"  v_3(det) = {n}: {enumerated} classes, formula gives {local_class_count(p, n)}")
