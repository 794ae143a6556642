"""
Links over spherical tilings
============================

For a tiling of the sphere the link complement splits into two copies of
the maximal ideal polyhedron of the same combinatorics, so half the link
volume is that polyhedron's volume.
"""

from tilingvol import spherical_catalog, spherical_link_volume

for entry in spherical_catalog():
    result = spherical_link_volume(entry)
    angles = ".".join(f"({result.angles[n]:.2f})" for n in entry.config.sizes)
    print(f"{entry.name:<28} {str(entry.config):<8} {angles:<30} vol/2 = {result.vol_over_2:9.4f}")
