"""Specializations: forgetting the statistic, and totalling it.

Setting q = 1 forgets the window count and leaves the classical series of
compositions by weight and parts (binomial coefficients).  Differentiating
in q before setting q = 1 totals the windows instead, and the coefficient
of x^n y^l collapses to the closed product (l-m+1) * C(n-1-m(m-1)/2, l-1).
"""

from math import comb

from staircomp import (
    gf_at_q1,
    staircase_gf,
    total_staircases,
    total_staircases_gf,
    total_staircases_oracle,
)

print("q = 1 marginal for m = 3: coefficient of x^a y^b vs C(a-1, b-1)")
marginal = gf_at_q1(3, 12)
for a in (4, 7, 10):
    row = [marginal.coeff(a, b, 0) for b in range(1, a + 1)]
    binom = [comb(a - 1, b - 1) for b in range(1, a + 1)]
    print(f"  a={a:2d}: {row} == {binom}: {row == binom}")
print("  (independent of m: every composition is kept once)")
print()

M = 2
print(f"Totals series for m = {M}: it is d/dq of the master series at q = 1")
totals = total_staircases_gf(M, 12)
derivative = staircase_gf(M, 12).diff_q().at_q1()
print(f"  closed form == derivative: {totals == derivative}")
print()

print("Window totals over compositions of 8, three ways:")
print("  parts  closed-form  series-coefficient  enumeration")
for parts in range(1, 9):
    closed = total_staircases(8, parts, M)
    coeff = totals.coeff(8, parts, 0)
    brute = total_staircases_oracle(8, parts, M)
    print(f"  {parts:5d}  {closed:11d}  {coeff:18d}  {brute:11d}")
print()

print("Clamping: with fewer parts than the pattern needs, the total is 0")
for parts in (1, 2, 3):
    print(f"  m=4, n=12, parts={parts}: {total_staircases(12, parts, 4)}")
