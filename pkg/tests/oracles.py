"""Independent reference computations used by the tests.

Nothing here calls into tilingvol: values come from adaptive quadrature
of the defining integrals.
"""

import cmath
import math

from scipy.integrate import quad

# frozen from quadrature (see lobachevsky_quad below)
V_OCT = 3.663862376708877            # 8 * Lambda(pi/4)
V_TET = 1.0149416064096535           # 3 * Lambda(pi/3)
IDEAL_2PI3_PI6_PI6 = 0.6766277376064357
CATALAN = 0.915965594177219          # Im Li2(i)


def dilog_quad(z):
    """Li2(z) = -int_0^1 log(1 - t z) / t dt along the straight path from 0."""
    z = complex(z)

    def f(t):
        return -cmath.log(1 - t * z) / t if t > 0 else z

    kw = dict(epsabs=1e-14, epsrel=1e-14, limit=400)
    re = quad(lambda t: f(t).real, 0, 1, **kw)[0]
    im = quad(lambda t: f(t).imag, 0, 1, **kw)[0]
    return complex(re, im)


def lobachevsky_quad(theta):
    return -quad(lambda t: math.log(abs(2 * math.sin(t))), 0, theta, epsabs=1e-15, epsrel=1e-15, limit=400)[0]


def det_leibniz(m):
    """Determinant by permutation expansion (exact for Fraction entries)."""
    from itertools import permutations

    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        prod = 1
        for i in range(n):
            prod *= m[i][perm[i]]
        total += sign * prod
    return total
