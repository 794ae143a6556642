"""Spherical tilings: the Platonic solids with 3- or 4-valent vertices and the Archimedean solids."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .tiling import GeometryClass, TilingSpec, VertexConfig, density, parse_vertex_config

__all__ = [
    "CatalogEntry",
    "SphericalLinkVolume",
    "spherical_catalog",
    "catalog_entry",
    "euler_characteristic",
    "spherical_link_volume",
]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    config: VertexConfig
    faces: dict

    @property
    def spec(self) -> TilingSpec:
        return TilingSpec(((self.config, 1.0),), faces=self.faces, name=self.name)


_TABLE = (
    ("tetrahedron", "3.3.3", {3: 4}),
    ("octahedron", "3.3.3.3", {3: 8}),
    ("cube", "4.4.4", {4: 6}),
    ("dodecahedron", "5.5.5", {5: 12}),
    ("truncated tetrahedron", "3.6.6", {3: 4, 6: 4}),
    ("cuboctahedron", "3.4.3.4", {3: 8, 4: 6}),
    ("truncated cube", "3.8.8", {3: 8, 8: 6}),
    ("truncated octahedron", "4.6.6", {4: 6, 6: 8}),
    ("rhombicuboctahedron", "3.4.4.4", {3: 8, 4: 18}),
    ("truncated cuboctahedron", "4.6.8", {4: 12, 6: 8, 8: 6}),
    ("icosidodecahedron", "3.5.3.5", {3: 20, 5: 12}),
    ("truncated dodecahedron", "3.10.10", {3: 20, 10: 12}),
    ("truncated icosahedron", "5.6.6", {5: 12, 6: 20}),
    ("rhombicosidodecahedron", "3.4.5.4", {3: 20, 4: 30, 5: 12}),
    ("truncated icosidodecahedron", "4.6.10", {4: 30, 6: 20, 10: 12}),
)

_CATALOG = tuple(CatalogEntry(name, parse_vertex_config(cfg), faces) for name, cfg, faces in _TABLE)


def spherical_catalog() -> tuple[CatalogEntry, ...]:
    return _CATALOG


def catalog_entry(name: str) -> CatalogEntry:
    key = name.strip().lower()
    for entry in _CATALOG:
        if entry.name == key:
            return entry
    raise DomainError(f"unknown solid {name!r}")


def euler_characteristic(config: VertexConfig, faces: dict) -> Fraction:
    """V - E + F for a polyhedron with the given vertex type and face counts."""
    corners = sum(n * k for n, k in faces.items())
    vertices = Fraction(corners, config.valence)
    edges = Fraction(corners, 2)
    return vertices - edges + sum(faces.values())


@dataclass(frozen=True)
class SphericalLinkVolume:
    name: str
    config: VertexConfig
    vol_L: float
    vol_over_2: float
    angles: dict

    def as_dict(self):
        return {
            "name": self.name,
            "config": str(self.config),
            "vol_L": self.vol_L,
            "vol_over_2": self.vol_over_2,
            "angles": [self.angles[n] for n in self.config.sizes],
        }


def spherical_link_volume(entry, faces=None) -> SphericalLinkVolume:
    """Volume of the alternating link over a spherical tiling.

    ``entry`` is a catalog name, a :class:`CatalogEntry`, or a vertex
    configuration given together with ``faces``.  Half the link volume is
    the volume of the maximal ideal polyhedron of the same combinatorics.
    """
    if isinstance(entry, CatalogEntry):
        spec = entry.spec
    elif faces is None:
        spec = catalog_entry(entry).spec
    else:
        config = entry if isinstance(entry, VertexConfig) else parse_vertex_config(entry)
        spec = TilingSpec(((config, 1.0),), faces=faces)
    report = density(spec)
    if report.geometry is not GeometryClass.SPHERICAL:
        raise DomainError(f"{spec.name} is {report.geometry}, not spherical")
    return SphericalLinkVolume(
        spec.name, spec.configs[0], report.total_volume, report.vol_over_2, dict(report.assignment.angles)
    )
