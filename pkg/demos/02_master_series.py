"""The master series F(x, y, q) and what its coefficients count.

The coefficient of x^a y^b q^s is the number of compositions of a with
b parts containing exactly s staircase windows of length m.  The series
is assembled from closed-form block determinants and inverted exactly in
the truncated integer series ring, then checked against enumeration.
"""

from staircomp import staircase_gf, staircase_histogram

M, ORDER = 2, 10

gf = staircase_gf(M, ORDER)
print(f"Master series for window length m = {M}, truncated at x^{ORDER}.")
print(f"Constant term (the empty composition): {gf.coeff(0, 0, 0)}")
print()

print("Coefficients at total a = 5 (b parts, s windows):")
for (a, b, s), c in gf.terms():
    if a == 5:
        print(f"  b={b}  s={s}  count={c}")
print()

print("The same classification by brute force:")
hist = staircase_histogram(5, M)
for (b, s), c in sorted(hist.counts.items()):
    print(f"  b={b}  s={s}  count={c}")
print()

match = all(
    {(b, s): c for (aa, b, s), c in gf.terms() if aa == a}
    == staircase_histogram(a, M).counts
    for a in range(1, ORDER + 1)
)
print(f"Series equals enumeration for every total up to {ORDER}: {match}")
print()

print("The q^0 slice counts the avoiders (no window anywhere):")
for a in range(1, 9):
    avoiders = sum(c for (aa, b, s), c in gf.terms() if aa == a and s == 0)
    print(f"  compositions of {a} avoiding the pattern: {avoiders} of {2 ** (a - 1)}")
