"""
The dilogarithm and the Lobachevsky function
=============================================

Every volume in this package is assembled from values of the complex
dilogarithm Li2.  Ideal tetrahedra have a second, simpler formula in terms
of the Lobachevsky function, which we use as a cross-check.
"""

import cmath
import math

from tilingvol import dilog, lobachevsky

# Li2(1) is the Basel sum, and Im Li2(i) is Catalan's constant
print("Li2(1)      =", dilog(1), " pi^2/6 =", math.pi ** 2 / 6)
print("Li2(i)      =", dilog(1j))

# The Lobachevsky function is half the imaginary part of Li2 on the unit circle
for theta in (0.3, math.pi / 4, 1.2):
    print(f"Lambda({theta:.4f}) = {lobachevsky(theta):.15f}",
          f"  via Li2: {0.5 * dilog(cmath.exp(2j * theta)).imag:.15f}")

# Eight copies of Lambda(pi/4) make the regular ideal octahedron
print("v_oct = 8 Lambda(pi/4) =", 8 * lobachevsky(math.pi / 4))
