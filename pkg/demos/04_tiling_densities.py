"""
Volume densities of tiling links
================================

An alternating link whose projection is a vertex-transitive tiling gets
its hyperbolic structure from bipyramids whose vertical angles are the
polygon angles of the equilateral realization.  The volume per crossing
follows directly.
"""

from tilingvol import TilingSpec, density

for config in ("4.4.4.4", "6.6.6", "3.6.3.6", "4.8.8", "3.4.6.4",
               "5.5.5.5", "6.6.6.6", "12.12.12.12", "4.8.4.8", "5.6.5.6", "7.7.7"):
    report = density(TilingSpec.from_configs(config))
    angles = ", ".join(f"{n}: {a:.4f}" for n, a in sorted(report.assignment.angles.items()))
    genus = report.minimal_genus if report.minimal_genus is not None else "-"
    print(f"{config:>12}  {str(report.geometry):<10} density {report.density:.4f}  genus {genus}  angles {angles}")

# Vertex classes can be mixed, given the fraction of crossings in each
mixed = TilingSpec((("3.6.3.6", 1), ("3.4.6.4", 2)))
print("mixed Euclidean classes:", density(mixed).density)
