"""Hyperbolic volumes of generalized tetrahedra, bipyramids and alternating tiling links."""

from .bipyramid import (
    V_OCT,
    V_TET,
    Ambient,
    BipyramidReport,
    WedgeSpec,
    beta_g,
    bipyramid_volume,
    bn_ideal,
    bn_square,
    bn_trunc,
    link_volume_upper_bound,
    maximal_wedge_angles,
    tiling_wedge_angles,
)
from .catalog import catalog_entry, euler_characteristic, spherical_catalog, spherical_link_volume
from .errors import (
    DomainError,
    InconsistentClassesError,
    NoRealizationError,
    NumericalError,
    ParseError,
    TilingVolError,
)
from .gentetra import (
    AngleVector,
    VertexKind,
    classify_vertices,
    criticality_residual,
    gram_matrix,
    ideal_volume_oracle,
    volume,
)
from .specfun import dilog, lobachevsky
from .tiling import (
    GeometryClass,
    TilingSpec,
    VertexConfig,
    check_decomposition,
    classify_geometry,
    density,
    minimal_genus,
    parse_vertex_config,
    solve_equilateral,
)

__version__ = "0.1.0"
