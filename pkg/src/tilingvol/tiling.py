"""Alternating k-uniform tiling links: equilateral realizations and volume density.

A tiling is given by its vertex classes, each a cyclic list of polygon
sizes (``"3.4.6.4"``) with the fraction of vertices in that class.  Each
polygon face contributes a bipyramid whose vertical angle is the polygon's
interior angle in the equilateral realization; 3-valent vertices get a
zero-volume bigon so that every crossing is 4-valent.
"""

from __future__ import annotations

import enum
import math
import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .bipyramid import bipyramid_volume
from .errors import (
    DomainError,
    InconsistentClassesError,
    NoRealizationError,
    NumericalError,
    ParseError,
)
from .gentetra import VertexKind, classify_vertices

__all__ = [
    "VertexConfig",
    "TilingSpec",
    "GeometryClass",
    "PolygonAngleAssignment",
    "CheckResult",
    "DecompositionChecks",
    "TilingReport",
    "parse_vertex_config",
    "polygon_angle",
    "classify_geometry",
    "solve_equilateral",
    "check_decomposition",
    "euler_per_crossing",
    "minimal_genus",
    "density",
]

CLASS_TOL = 1e-9
MAX_BISECTIONS = 200

_TOKEN = re.compile(r"\d+")


@dataclass(frozen=True)
class VertexConfig:
    sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(int(n) for n in self.sizes)
        if len(sizes) not in (3, 4):
            raise DomainError(f"vertex configuration must have 3 or 4 polygons, got {len(sizes)}")
        if min(sizes) < 3:
            raise DomainError(f"polygon sizes must be >= 3, got {sizes}")
        object.__setattr__(self, "sizes", sizes)

    @property
    def valence(self) -> int:
        return len(self.sizes)

    @property
    def needs_bigon(self) -> bool:
        return self.valence == 3

    def __str__(self):
        return ".".join(map(str, self.sizes))


def parse_vertex_config(text: str) -> VertexConfig:
    """Parse ``"p.q.r"`` or ``"p.q.r.s"``.

    >>> parse_vertex_config("3.4.6.4").sizes
    (3, 4, 6, 4)
    """
    if not isinstance(text, str):
        raise ParseError(f"vertex configuration must be a string, got {type(text).__name__}")
    sizes = []
    pos = 0
    for i, token in enumerate(text.split(".")):
        if not _TOKEN.fullmatch(token):
            raise ParseError(f"bad polygon size {token!r} in {text!r}", text, pos)
        n = int(token)
        if n < 3:
            raise ParseError(f"polygon size {n} < 3 in {text!r}", text, pos)
        sizes.append(n)
        pos += len(token) + 1
    if len(sizes) not in (3, 4):
        raise ParseError(f"{text!r} has {len(sizes)} polygons; expected 3 or 4", text, 0)
    return VertexConfig(tuple(sizes))


def _as_config(c) -> VertexConfig:
    if isinstance(c, VertexConfig):
        return c
    if isinstance(c, str):
        return parse_vertex_config(c)
    return VertexConfig(tuple(c))


@dataclass(frozen=True)
class TilingSpec:
    """Vertex classes with crossing weights, plus optional face counts.

    ``classes`` holds ``(VertexConfig, weight)`` pairs; weights are
    normalized to sum to one.  ``faces`` maps polygon size to face count
    and is only meaningful for finite (spherical) tilings.
    """

    classes: tuple[tuple[VertexConfig, float], ...]
    faces: dict | None = None
    name: str | None = None

    def __post_init__(self):
        classes = []
        for item in self.classes:
            if isinstance(item, (VertexConfig, str)):
                config, weight = item, 1.0
            else:
                config, weight = item
            weight = float(weight)
            if not math.isfinite(weight) or weight < 0:
                raise DomainError(f"class weight must be a nonnegative number, got {weight!r}")
            classes.append((_as_config(config), weight))
        if not classes:
            raise DomainError("a tiling needs at least one vertex class")
        total = sum(w for _, w in classes)
        if total <= 0:
            raise DomainError("class weights sum to zero")
        object.__setattr__(self, "classes", tuple((c, w / total) for c, w in classes))
        if self.faces is not None:
            faces = {int(n): int(k) for n, k in dict(self.faces).items()}
            if any(n < 3 or k < 0 for n, k in faces.items()):
                raise DomainError(f"bad face multiset {faces}")
            object.__setattr__(self, "faces", faces)
            chi = _face_euler(self)
            if chi != 2:
                raise DomainError(f"face multiset {faces} is not a sphere (V - E + F = {chi})")
        if self.name is None:
            object.__setattr__(self, "name", " + ".join(str(c) for c, _ in self.classes))

    @classmethod
    def from_configs(cls, *configs, faces=None, name=None) -> TilingSpec:
        """Single-class or equally weighted classes from config strings."""
        return cls(tuple((c, 1.0) for c in configs), faces=faces, name=name)

    @property
    def configs(self) -> tuple[VertexConfig, ...]:
        return tuple(c for c, _ in self.classes)

    @property
    def sizes(self) -> list[int]:
        return sorted({n for c in self.configs for n in c.sizes})


def _rational_weights(spec):
    return [Fraction(w).limit_denominator(10**6) for _, w in spec.classes]


def _face_euler(spec):
    weights = _rational_weights(spec)
    valence = sum(w * c.valence for w, (c, _) in zip(weights, spec.classes))
    corners = sum(n * k for n, k in spec.faces.items())
    return Fraction(corners) / valence - Fraction(corners, 2) + sum(spec.faces.values())


class GeometryClass(enum.Enum):
    SPHERICAL = "Spherical"
    EUCLIDEAN = "Euclidean"
    HYPERBOLIC = "Hyperbolic"

    def __str__(self):
        return self.value


_APEX_KIND = {
    GeometryClass.SPHERICAL: VertexKind.FINITE,
    GeometryClass.EUCLIDEAN: VertexKind.IDEAL,
    GeometryClass.HYPERBOLIC: VertexKind.ULTRA_IDEAL,
}


def _config_geometry(config):
    # sum of Euclidean interior angles, in units of pi, against 2
    total = sum(Fraction(n - 2, n) for n in config.sizes)
    if total > 2:
        return GeometryClass.HYPERBOLIC
    if total < 2:
        return GeometryClass.SPHERICAL
    return GeometryClass.EUCLIDEAN


def classify_geometry(spec: TilingSpec) -> GeometryClass:
    verdicts = {_config_geometry(c) for c in spec.configs}
    if len(verdicts) != 1:
        detail = ", ".join(f"{c}: {_config_geometry(c)}" for c in spec.configs)
        raise InconsistentClassesError(f"vertex classes disagree on geometry ({detail})")
    return verdicts.pop()


def polygon_angle(n: int, s: float) -> float:
    """Interior angle of the regular n-gon whose parameter is s.

    s is 1/cosh(d/2) for hyperbolic side d, 1 for Euclidean polygons and
    1/cos(d/2) for spherical ones.
    """
    x = s * math.cos(math.pi / n)
    return 2 * math.asin(min(1.0, x))


def _angle_residual(config, s):
    return sum(polygon_angle(n, s) for n in config.sizes) - 2 * math.pi


@dataclass(frozen=True)
class PolygonAngleAssignment:
    geometry: GeometryClass
    s: float
    edge_length: float
    angles: dict

    def as_dict(self):
        return {
            "geometry": str(self.geometry),
            "s": self.s,
            "edge_length": self.edge_length,
            "angles": {str(n): a for n, a in sorted(self.angles.items())},
        }


def _bisect(fn, lo, hi, tol):
    f_lo, f_hi = fn(lo), fn(hi)
    if f_lo > 0 or f_hi < 0:
        raise NoRealizationError(f"no equilateral realization: residual does not change sign on [{lo}, {hi}]")
    for _ in range(MAX_BISECTIONS):
        mid = 0.5 * (lo + hi)
        f_mid = fn(mid)
        if abs(f_mid) <= tol:
            return mid
        if mid in (lo, hi):
            break
        if f_mid < 0:
            lo = mid
        else:
            hi = mid
    best = min((lo, hi), key=lambda x: abs(fn(x)))
    if abs(fn(best)) <= tol:
        return best
    raise NumericalError(f"bisection did not reach |F| <= {tol:g} (best {abs(fn(best)):.3g})")


def solve_equilateral(spec: TilingSpec, tol: float = 1e-13) -> PolygonAngleAssignment:
    """Interior angles of the equilateral realization of a tiling.

    Bisection on s for sum(alpha_n(s)) = 2 pi around the first vertex
    class; the remaining classes must then close up to 1e-9.
    """
    geometry = classify_geometry(spec)
    first = spec.configs[0]
    if geometry is GeometryClass.EUCLIDEAN:
        s, d = 1.0, 0.0
    else:
        def residual(x):
            return _angle_residual(first, x)

        if geometry is GeometryClass.HYPERBOLIC:
            s = _bisect(residual, 0.0, 1.0, tol)
            d = 2 * math.acosh(1 / s)
        else:
            s_max = min(1 / math.cos(math.pi / n) for n in first.sizes)
            s = _bisect(residual, 1.0, s_max, tol)
            d = 2 * math.acos(min(1.0, 1 / s))
    for config in spec.configs[1:]:
        r = _angle_residual(config, s)
        if abs(r) > CLASS_TOL:
            raise InconsistentClassesError(
                f"classes not simultaneously equilateral: {config} misses 2pi by {r:.3g}"
            )
    angles = {n: polygon_angle(n, s) for n in spec.sizes}
    return PolygonAngleAssignment(geometry, s, d, angles)


@dataclass(frozen=True)
class CheckResult:
    check: str
    config: str
    residual: float
    passed: bool


@dataclass(frozen=True)
class DecompositionChecks:
    results: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self):
        return [r for r in self.results if not r.passed]

    def as_dict(self):
        flags = {}
        for r in self.results:
            flags[r.check] = flags.get(r.check, True) and r.passed
        flags["all_passed"] = self.ok
        return flags


def check_decomposition(spec: TilingSpec, assignment: PolygonAngleAssignment, tol: float = CLASS_TOL):
    """Gluing conditions of the bipyramid decomposition around each crossing.

    Vertical angles close up to 2pi; equatorial angles pi - alpha close up
    to 2pi at a 4-valent crossing, or to pi across the three polygons at a
    bigon; every wedge apex has the kind dictated by the geometry.
    """
    results = []
    expected_apex = _APEX_KIND[assignment.geometry]
    for config in spec.configs:
        alphas = [assignment.angles[n] for n in config.sizes]
        label = str(config)
        r = sum(alphas) - 2 * math.pi
        results.append(CheckResult("vertical_sum", label, r, abs(r) <= tol))
        betas = sum(math.pi - a for a in alphas)
        if config.valence == 4:
            r = betas - 2 * math.pi
            results.append(CheckResult("equatorial_sum", label, r, abs(r) <= tol))
        else:
            r = betas - math.pi
            results.append(CheckResult("bigon_relation", label, r, abs(r) <= tol))
        for n in sorted(set(config.sizes)):
            apex = classify_vertices(_wedge(n, assignment.angles[n]))[2]
            r = apex.angle_sum - math.pi
            results.append(CheckResult("apex_kind", f"{label}:{n}", r, apex.kind is expected_apex))
    return DecompositionChecks(tuple(results))


def _wedge(n, alpha):
    from .bipyramid import tiling_wedge_angles

    return tiling_wedge_angles(n, alpha)


def euler_per_crossing(spec: TilingSpec) -> Fraction:
    """Euler characteristic per crossing of the link projection.

    A 4-valent vertex contributes sum(1/n) - 1; a 3-valent one also carries
    half a bigon, giving sum(1/n) - 1/2.
    """
    total = Fraction(0)
    for w, config in zip(_rational_weights(spec), spec.configs):
        per = sum(Fraction(1, n) for n in config.sizes)
        per -= 1 if config.valence == 4 else Fraction(1, 2)
        total += w * per
    return total


def _face_incidences(spec):
    """Faces per crossing, by polygon size (bigons as size 2)."""
    faces = Counter()
    for w, config in zip(_rational_weights(spec), spec.configs):
        for n in config.sizes:
            faces[n] += w / n
        if config.needs_bigon:
            faces[2] += w / 2
    return faces


def minimal_genus(spec: TilingSpec, max_crossings: int = 100_000) -> Fraction:
    """Smallest genus of a closed orientable quotient carrying the tiling.

    Searches for the fewest crossings k whose Euler characteristic
    k * chi_per_crossing is even and <= -2 with integral face and class
    counts, and returns g = (2 - chi) / 2.
    """
    if classify_geometry(spec) is not GeometryClass.HYPERBOLIC:
        raise DomainError("minimal genus is only defined for hyperbolic tilings")
    chi = euler_per_crossing(spec)
    weights = _rational_weights(spec)
    faces = _face_incidences(spec)
    for k in range(1, max_crossings + 1):
        total = k * chi
        if total.denominator != 1 or total > -2 or total.numerator % 2:
            continue
        if all((k * f).denominator == 1 for f in faces.values()) and all(
            (k * w).denominator == 1 for w in weights
        ):
            return (2 - total) / 2
    raise NumericalError(f"no admissible quotient with at most {max_crossings} crossings")


@dataclass(frozen=True)
class TilingReport:
    name: str
    geometry: GeometryClass
    assignment: PolygonAngleAssignment
    density: float
    per_face_volumes: dict
    euler_per_crossing: Fraction
    minimal_genus: Fraction | None
    checks: DecompositionChecks
    total_volume: float | None = None
    vol_over_2: float | None = None
    notes: dict = field(default_factory=dict)

    def as_dict(self):
        out = {
            "name": self.name,
            "geometry": str(self.geometry),
            "density": self.density,
            "s": self.assignment.s,
            "edge_length": self.assignment.edge_length,
            "angles": {str(n): a for n, a in sorted(self.assignment.angles.items())},
            "per_face_volumes": {str(n): v for n, v in sorted(self.per_face_volumes.items())},
            "euler_per_crossing": str(self.euler_per_crossing),
            "minimal_genus": str(self.minimal_genus) if self.minimal_genus is not None else "n/a (not hyperbolic)",
            "checks": self.checks.as_dict(),
        }
        if self.total_volume is not None:
            out["total_volume"] = self.total_volume
            out["vol_over_2"] = self.vol_over_2
        out.update(self.notes)
        return out


def density(spec: TilingSpec, tol: float = 1e-13) -> TilingReport:
    """Volume per crossing of the alternating tiling link.

    One crossing per tiling vertex; a face of size n meets n crossings, so
    each crossing receives vol(B_n(alpha_n)) / n from every polygon around it.
    """
    assignment = solve_equilateral(spec, tol)
    per_face = {n: bipyramid_volume(n, assignment.angles[n]).total_volume for n in spec.sizes}
    if any(c.needs_bigon for c in spec.configs):
        per_face[2] = 0.0
    value = 0.0
    for config, w in spec.classes:
        value += w * sum(per_face[n] / n for n in config.sizes)
    genus = minimal_genus(spec) if assignment.geometry is GeometryClass.HYPERBOLIC else None
    total = half = None
    if spec.faces is not None:
        total = sum(k * per_face[n] for n, k in spec.faces.items())
        half = total / 2
    return TilingReport(
        name=spec.name,
        geometry=assignment.geometry,
        assignment=assignment,
        density=value,
        per_face_volumes=per_face,
        euler_per_crossing=euler_per_crossing(spec),
        minimal_genus=genus,
        checks=check_decomposition(spec, assignment),
        total_volume=total,
        vol_over_2=half,
    )
