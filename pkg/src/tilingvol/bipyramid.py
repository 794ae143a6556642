"""Wedges and face-centered bipyramids.

An n-bipyramid with vertical dihedral angle alpha splits along its core
line into n congruent wedges with angles
``(2pi/n, alpha/2, alpha/2, pi - alpha, alpha/2, alpha/2)``: the core edge
carries A, the equatorial edge carries D, and v3, v4 are the apexes.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .gentetra import AngleVector, VertexKind, classify_vertices, volume

__all__ = [
    "WedgeSpec",
    "BipyramidReport",
    "Ambient",
    "VolumeBounds",
    "V_TET",
    "V_OCT",
    "maximal_wedge_angles",
    "tiling_wedge_angles",
    "bipyramid_volume",
    "bn_trunc",
    "bn_ideal",
    "bn_square",
    "beta_g",
    "link_volume_upper_bound",
]

# volumes of the regular ideal tetrahedron and octahedron
V_TET = 1.0149416064096536
V_OCT = 3.6638623767088760


def _check_n(n, minimum):
    if isinstance(n, bool) or int(n) != n or n < minimum:
        raise DomainError(f"polygon size must be an integer >= {minimum}, got {n!r}")
    return int(n)


def _check_alpha(alpha):
    if not (math.isfinite(alpha) and 0 < alpha < math.pi):
        raise DomainError(f"vertical angle must lie in (0, pi), got {alpha!r}")
    return float(alpha)


@dataclass(frozen=True)
class WedgeSpec:
    n: int
    alpha: float

    def __post_init__(self):
        object.__setattr__(self, "n", _check_n(self.n, 2))
        object.__setattr__(self, "alpha", _check_alpha(self.alpha))

    @property
    def angles(self) -> AngleVector:
        half = self.alpha / 2
        return AngleVector(2 * math.pi / self.n, half, half, math.pi - self.alpha, half, half)


@dataclass(frozen=True)
class BipyramidReport:
    n: int
    alpha: float
    apex_kind: VertexKind
    wedge_volume: float
    total_volume: float

    def as_dict(self):
        return {
            "n": self.n,
            "alpha": self.alpha,
            "apex_kind": str(self.apex_kind),
            "wedge_volume": self.wedge_volume,
            "total_volume": self.total_volume,
        }


def maximal_wedge_angles(a: float) -> AngleVector:
    """Angles of the largest wedge with two ideal vertices and core angle ``a``."""
    if not (math.isfinite(a) and 0 <= a <= math.pi):
        raise DomainError(f"core angle must lie in [0, pi], got {a!r}")
    d = math.acos(0.5 * (math.cos(a) - 1))
    side = (math.pi - d) / 2
    return AngleVector(a, side, side, d, side, side)


def tiling_wedge_angles(n: int, alpha: float) -> AngleVector:
    return WedgeSpec(n, alpha).angles


def _report(n, alpha, wedge):
    apex = classify_vertices(wedge)[2].kind
    if n == 2:
        # A = pi: the wedge is flat, the formula has a removable singularity
        return BipyramidReport(n, alpha, apex, 0.0, 0.0)
    w = volume(wedge)
    return BipyramidReport(n, alpha, apex, w, n * w)


def bipyramid_volume(n: int, alpha: float) -> BipyramidReport:
    """Volume of the maximally symmetric n-bipyramid with vertical angle alpha."""
    spec = WedgeSpec(n, alpha)
    return _report(spec.n, spec.alpha, spec.angles)


def bn_trunc(n: int) -> BipyramidReport:
    """Maximal doubly truncated n-bipyramid: n maximal wedges with A = 2pi/n."""
    n = _check_n(n, 2)
    wedge = maximal_wedge_angles(2 * math.pi / n)
    return _report(n, math.pi - wedge.D, wedge)


def bn_ideal(n: int) -> BipyramidReport:
    """Regular ideal n-bipyramid."""
    n = _check_n(n, 3)
    return bipyramid_volume(n, (n - 2) * math.pi / n)


def bn_square(n: int) -> BipyramidReport:
    """n-bipyramid with every dihedral angle pi/2.

    The apexes are ultra-ideal only for n >= 5; smaller n is computed but
    warned about.
    """
    n = _check_n(n, 3)
    if n < 5:
        warnings.warn(f"right-angled {n}-bipyramid does not have ultra-ideal apexes", stacklevel=2)
    return bipyramid_volume(n, math.pi / 2)


def beta_g(g) -> float:
    """Volume density vol(B^sq_{8g-4}) / (2g - 1) for (half-integer) genus g >= 2."""
    twice = Fraction(g).limit_denominator(1000) * 2 if not isinstance(g, Fraction) else g * 2
    if abs(float(twice) - 2 * float(g)) > 1e-12 or twice.denominator != 1:
        raise DomainError(f"genus must be a multiple of 1/2, got {g!r}")
    if twice < 4:
        raise DomainError(f"genus must be at least 2, got {g!r}")
    two_g = int(twice)
    return bn_square(4 * two_g - 4).total_volume / (two_g - 1)


class Ambient(enum.Enum):
    SPHERE = "Sphere"
    THICKENED_TORUS = "ThickenedTorus"
    THICKENED_SURFACE = "ThickenedSurface"


@dataclass(frozen=True)
class VolumeBounds:
    octahedral_bound: float
    bipyramid_bound: float


def link_volume_upper_bound(face_sizes, ambient: Ambient, crossings: int) -> VolumeBounds:
    """Octahedral and face-centered bipyramid upper bounds on a link volume.

    Links in S^3 or a thickened torus use ideal octahedra and regular ideal
    bipyramids; links in a thickened higher-genus surface use the maximal
    octahedron with two ideal vertices (2 v_oct) and truncated bipyramids.
    """
    ambient = Ambient(ambient)
    crossings = _check_n(crossings, 1)
    sizes = [_check_n(n, 2) for n in face_sizes]
    if ambient is Ambient.THICKENED_SURFACE:
        per_crossing = 2 * V_OCT
        bip = sum(bn_trunc(n).total_volume for n in sizes)
    else:
        per_crossing = V_OCT
        bip = sum(bn_ideal(n).total_volume for n in sizes if n > 2)
    return VolumeBounds(crossings * per_crossing, bip)
