"""Complex dilogarithm and the Lobachevsky function.

Both are evaluated in double precision with absolute error around 1e-15
for moderate arguments.  The two functions use separate series so that
the Lobachevsky function can serve as an independent check on volumes
computed through the dilogarithm.
"""

import cmath
import math
from fractions import Fraction

__all__ = ["dilog", "lobachevsky", "bernoulli_numbers"]

PI2_6 = math.pi ** 2 / 6

_MACLAURIN_TERMS = 60   # |z| <= 1/2: term ratio <= 1/2
_BERNOULLI_TERMS = 30   # |u| <= 1.3 against radius 2*pi


def bernoulli_numbers(count):
    """Return B_0 .. B_{count-1} as exact fractions (convention B_1 = -1/2)."""
    b = [Fraction(0)] * count
    for m in range(count):
        acc = Fraction(0)
        binom = 1
        for k in range(m):
            acc += binom * b[k]
            binom = binom * (m + 1 - k) // (k + 1)
        b[m] = Fraction(1) if m == 0 else -acc / (m + 1)
    return b


_B = bernoulli_numbers(2 * _BERNOULLI_TERMS + 2)

# Li2(z) = sum_n B_n u^(n+1) / (n+1)!,  u = -log(1 - z)
_LI2_BERNOULLI = [float(_B[n] / math.factorial(n + 1)) for n in range(len(_B))]

# log(sin t / t) = -sum_n c_n t^(2n); integrating gives the Lobachevsky tail
_LOB_COEFFS = [
    float(2 ** (2 * n - 1) * abs(_B[2 * n]) / (n * math.factorial(2 * n)) / (2 * n + 1))
    for n in range(1, _BERNOULLI_TERMS + 1)
]


def _check_finite(x, name):
    if isinstance(x, complex):
        ok = math.isfinite(x.real) and math.isfinite(x.imag)
    else:
        ok = math.isfinite(x)
    if not ok:
        from .errors import DomainError

        raise DomainError(f"{name} requires a finite argument, got {x!r}")


def _maclaurin(z):
    total = 0j
    power = z
    for k in range(1, _MACLAURIN_TERMS + 1):
        total += power / (k * k)
        power *= z
        if abs(power) < 1e-18 * k * k:
            break
    return total


def _bernoulli_series(z):
    u = -cmath.log(1 - z)
    u2 = u * u
    # n = 0 and n = 1 terms, then only even n contribute
    total = u - u2 / 4
    power = u * u2
    for n in range(2, len(_LI2_BERNOULLI), 2):
        term = _LI2_BERNOULLI[n] * power
        total += term
        if abs(term) < 1e-18:
            break
        power *= u2
    return total


def _dilog_disk(z):
    # |z| <= 1, z != 1
    if abs(z) <= 0.5:
        return _maclaurin(z)
    if z.real > 0.5:
        w = 1 - z
        head = PI2_6 - cmath.log(z) * cmath.log(w)
        if abs(w) <= 0.5:
            return head - _maclaurin(w)
        return head - _bernoulli_series(w)
    return _bernoulli_series(z)


def dilog(z):
    """Principal branch of the dilogarithm Li2(z).

    On the real ray (1, inf) the value is the limit from below the cut,
    ``Im Li2(x) = -pi log x``.

    >>> abs(dilog(1) - math.pi**2 / 6) < 1e-15
    True
    """
    z = complex(z)
    _check_finite(z, "dilog")
    if z == 0:
        return 0j
    if z == 1:
        return complex(PI2_6)
    if abs(z) <= 1:
        return _dilog_disk(z)
    # inversion; a signed zero on the real axis must not flip the branch
    neg = complex(-z.real, -z.imag if z.imag != 0 else 0.0)
    return -PI2_6 - 0.5 * cmath.log(neg) ** 2 - _dilog_disk(1 / z)


def lobachevsky(theta):
    """Lobachevsky function, Lambda(theta) = -int_0^theta log|2 sin t| dt.

    Odd and pi-periodic.  Evaluated by its own power series after reduction
    to [-pi/2, pi/2]; it does not go through :func:`dilog`.
    """
    theta = float(theta)
    _check_finite(theta, "lobachevsky")
    t = math.remainder(theta, math.pi)
    if t == 0.0:
        return 0.0
    sign = 1.0 if t > 0 else -1.0
    t = abs(t)
    total = t * (1.0 - math.log(2.0 * t))
    t2 = t * t
    power = t * t2
    for c in _LOB_COEFFS:
        term = c * power
        total += term
        if term < 1e-18:
            break
        power *= t2
    return sign * total
