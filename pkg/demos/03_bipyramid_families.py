"""
Bipyramid families
==================

Face-centered bipyramids are the building blocks of link complements.
Three families appear: regular ideal bipyramids, maximal truncated ones,
and right-angled ones.  Their volume per wedge behaves very differently
as the number of sides grows.
"""

import math

from tilingvol import V_OCT, beta_g, bn_ideal, bn_square, bn_trunc

print(f"{'n':>5} {'ideal':>10} {'trunc':>10} {'square':>10}")
for n in (3, 4, 5, 6, 8, 12, 24, 100):
    square = bn_square(n).total_volume if n >= 5 else float("nan")
    print(f"{n:>5} {bn_ideal(n).total_volume:10.4f} {bn_trunc(n).total_volume:10.4f} {square:10.4f}")

# Ideal bipyramids gain little per wedge; truncated ones approach v_oct / 2 per wedge
for n in (10, 100, 1000):
    print(f"n={n}: ideal/n = {bn_ideal(n).total_volume / n:.5f}, trunc/n = {bn_trunc(n).total_volume / n:.5f}")
print("v_oct / 2 =", V_OCT / 2)

# Densities of right-angled (8g-4)-gon tilings in genus g
for g in (2, 2.5, 3, 5, 10):
    print(f"beta_{g} = {beta_g(g):.4f}")
print("limit 2 v_oct =", 2 * V_OCT)
