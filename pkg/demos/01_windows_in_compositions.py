"""Counting staircase windows inside compositions, by brute force.

A composition of n is an ordered tuple of positive parts summing to n.
A staircase window of length m is a run of m consecutive parts whose
j-th part is at least j.  Windows may overlap, and every start index in
the composition is tested.
"""

from staircomp import Composition, compositions, count_staircases, staircase_histogram

print("All compositions of 4, with their windows of length 2:")
for c in sorted(compositions(4), key=lambda c: c.parts):
    print(f"  {c.parts!s:<14} -> {count_staircases(c, 2)} windows")
print()

print("A worked example: the composition (4, 3, 1, 2, 3)")
c = Composition((4, 3, 1, 2, 3))
for m in (1, 2, 3, 4):
    print(f"  windows of length {m}: {count_staircases(c, m)}")
print("  length 1 windows are just the parts; (1, 2, 3) is the only length-3 run.")
print()

print("Classifying all compositions of 6 by (parts, windows of length 2):")
hist = staircase_histogram(6, 2)
for (b, s), n in sorted(hist.counts.items()):
    print(f"  {n:2d} compositions with {b} parts and {s} windows")
print(f"  total {hist.total()} = 2^5 compositions")
