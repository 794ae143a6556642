"""Generalized hyperbolic tetrahedra described by their six dihedral angles.

Angles are labelled (A, B, C, D, E, F) with opposite pairs (A, D), (B, E)
and (C, F).  Vertex stars::

    v1: D, B, F     v2: D, C, E     v3: A, B, C     v4: A, E, F

so A joins v3 and v4 and D joins v1 and v2.  The volume is computed from
the angles alone with the dilogarithm formula for mildly truncated
tetrahedra; :func:`ideal_volume_oracle` is an independent route for the
all-ideal case.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NumericalError
from .specfun import dilog, lobachevsky

__all__ = [
    "AngleVector",
    "VertexKind",
    "VertexClass",
    "VERTEX_EDGES",
    "gram_matrix",
    "classify_vertices",
    "volume",
    "ideal_volume_oracle",
    "criticality_residual",
]

_ANGLE_SLACK = 1e-12
_DEGENERATE_DENOMINATOR = 1e-12

# edge names meeting at each vertex
VERTEX_EDGES = (("D", "B", "F"), ("D", "C", "E"), ("A", "B", "C"), ("A", "E", "F"))


@dataclass(frozen=True)
class AngleVector:
    A: float
    B: float
    C: float
    D: float
    E: float
    F: float

    def __post_init__(self):
        for name in "ABCDEF":
            x = getattr(self, name)
            if not math.isfinite(x):
                raise DomainError(f"dihedral angle {name} is not finite: {x!r}")
            if x < -_ANGLE_SLACK or x > math.pi + _ANGLE_SLACK:
                raise DomainError(f"dihedral angle {name}={x!r} outside [0, pi]")
            object.__setattr__(self, name, float(min(max(x, 0.0), math.pi)))

    @classmethod
    def from_sequence(cls, angles) -> AngleVector:
        angles = list(angles)
        if len(angles) != 6:
            raise DomainError(f"expected six dihedral angles, got {len(angles)}")
        return cls(*angles)

    def as_tuple(self) -> tuple[float, ...]:
        return (self.A, self.B, self.C, self.D, self.E, self.F)

    def replace(self, **changes) -> AngleVector:
        values = dict(zip("ABCDEF", self.as_tuple()))
        values.update(changes)
        return AngleVector(**values)


class VertexKind(enum.Enum):
    FINITE = "Finite"
    IDEAL = "Ideal"
    ULTRA_IDEAL = "UltraIdeal"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class VertexClass:
    kind: VertexKind
    angle_sum: float


def kind_from_angle_sum(angle_sum: float, tol: float = 1e-9) -> VertexKind:
    """Vertex links are spherical, Euclidean or hyperbolic triangles."""
    if angle_sum > math.pi + tol:
        return VertexKind.FINITE
    if angle_sum < math.pi - tol:
        return VertexKind.ULTRA_IDEAL
    return VertexKind.IDEAL


def gram_matrix(delta: AngleVector) -> np.ndarray:
    """Gram matrix of the four face normals, entries ``-cos`` of the dihedral angles.

    Row/column i belongs to the face opposite vertex i, so entry (i, j) is
    the edge joining the two remaining vertices.
    """
    cA, cB, cC, cD, cE, cF = (math.cos(x) for x in delta.as_tuple())
    return np.array(
        [
            [1.0, -cA, -cB, -cF],
            [-cA, 1.0, -cC, -cE],
            [-cB, -cC, 1.0, -cD],
            [-cF, -cE, -cD, 1.0],
        ]
    )


def classify_vertices(delta: AngleVector, tol: float = 1e-9) -> tuple[VertexClass, ...]:
    if tol <= 0:
        raise DomainError("classification tolerance must be positive")
    angles = dict(zip("ABCDEF", delta.as_tuple()))
    out = []
    for edges in VERTEX_EDGES:
        s = sum(angles[e] for e in edges)
        out.append(VertexClass(kind_from_angle_sum(s, tol), s))
    return tuple(out)


def volume(delta: AngleVector) -> float:
    """Hyperbolic volume of a mildly truncated generalized tetrahedron.

    Uses the dilogarithm formula in the six angles with the principal
    square root of ``det G``.  The sign depends on the ordering of the two
    roots ``z1, z2``, so the absolute value is returned.
    """
    A, B, C, D, E, F = delta.as_tuple()
    a, b, c, d, e, f = (cmath.exp(1j * x) for x in (A, B, C, D, E, F))

    det_g = float(np.linalg.det(gram_matrix(delta)))
    root = cmath.sqrt(complex(det_g))
    sines = math.sin(A) * math.sin(D) + math.sin(B) * math.sin(E) + math.sin(C) * math.sin(F)
    denom = a * d + b * e + c * f + a * b * f + a * c * e + b * c * d + d * e * f + a * b * c * d * e * f
    if abs(denom) < _DEGENERATE_DENOMINATOR:
        raise NumericalError(f"degenerate tetrahedron: |denominator| = {abs(denom):.3g} for {delta}")

    z1 = -2 * (sines - root) / denom
    z2 = -2 * (sines + root) / denom

    abde, acdf, bcef = a * b * d * e, a * c * d * f, b * c * e * f
    abc, aef, bdf, cde = a * b * c, a * e * f, b * d * f, c * d * e

    def u(z):
        return 0.5 * (
            dilog(z) + dilog(abde * z) + dilog(acdf * z) + dilog(bcef * z)
            - dilog(-abc * z) - dilog(-aef * z) - dilog(-bdf * z) - dilog(-cde * z)
        )

    vol = 0.5 * (u(z1) - u(z2)).imag
    if not math.isfinite(vol):
        raise NumericalError(f"non-finite volume for {delta}")
    return abs(vol)


def ideal_volume_oracle(theta1: float, theta2: float, theta3: float) -> float:
    """Volume of the ideal tetrahedron with opposite-pair angles theta1..3."""
    thetas = (theta1, theta2, theta3)
    if any(not math.isfinite(t) or t <= 0 for t in thetas):
        raise DomainError(f"ideal tetrahedron angles must be positive, got {thetas}")
    if abs(sum(thetas) - math.pi) > 1e-9:
        raise DomainError(f"ideal tetrahedron angles must sum to pi, got sum {sum(thetas)!r}")
    return sum(lobachevsky(t) for t in thetas)


def criticality_residual(a: float, h: float = 1e-5, point: AngleVector | None = None) -> float:
    """Norm of the constrained volume gradient at a wedge with fixed A = a.

    The constraint manifold keeps v1 and v2 ideal (B+F+D = C+E+D = pi); it
    is parametrized by (B, C, D).  By default the point is the maximal
    wedge for ``a``; a vanishing residual witnesses that it is critical.
    """
    from .bipyramid import maximal_wedge_angles

    if not 0 <= a < math.pi:
        raise DomainError(f"criticality_residual needs a in [0, pi), got {a!r}")
    delta = maximal_wedge_angles(a) if point is None else point
    if abs(delta.A - a) > 1e-12:
        raise DomainError("point must have A equal to a")

    def vol_at(b, c, dd):
        return volume(AngleVector(a, b, c, dd, math.pi - dd - c, math.pi - dd - b))

    base = [delta.B, delta.C, delta.D]
    grad = []
    for i in range(3):
        up, down = list(base), list(base)
        up[i] += h
        down[i] -= h
        grad.append((vol_at(*up) - vol_at(*down)) / (2 * h))
    return math.hypot(*grad)
