"""
Volumes of generalized tetrahedra
=================================

A generalized hyperbolic tetrahedron is fixed by its six dihedral angles
(A, B, C, D, E, F); A is opposite D, B opposite E, C opposite F.  Vertices
may be finite, ideal or ultra-ideal (truncated).
"""

import math

import numpy as np

from tilingvol import AngleVector, classify_vertices, gram_matrix, ideal_volume_oracle, volume

pi = math.pi

# The regular ideal tetrahedron
regular = AngleVector(*[pi / 3] * 6)
print("regular ideal tetrahedron:", volume(regular))
print("Gram determinant:", np.linalg.det(gram_matrix(regular)), " (-27/16 =", -27 / 16, ")")

# The same number from three Lobachevsky values
print("Lobachevsky route:", ideal_volume_oracle(pi / 3, pi / 3, pi / 3))

# A wedge with two ideal and two truncated vertices: half a regular ideal octahedron
wedge = AngleVector(0, pi / 4, pi / 4, pi / 2, pi / 4, pi / 4)
for i, v in enumerate(classify_vertices(wedge), 1):
    print(f"  v{i}: {v.kind} (angle sum {v.angle_sum:.4f})")
print("wedge volume:", volume(wedge), " four of them:", 4 * volume(wedge))
