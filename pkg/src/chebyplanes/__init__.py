"""Geodesics of (R^n, d_inf) and isometry classes of planes in R^3_inf."""

from .isometry import (
    CanonicalClass,
    PlaneOrbit,
    SignedPermutation,
    act,
    canonical_class,
    group_elements,
    isometric,
    orbit,
)
from .metric_core import (
    DimensionError,
    Point,
    Polyline,
    chebyshev_distance,
    polyline_length,
    segment,
    to_scalar,
)
from .planes import (
    FlatChart,
    Plane,
    SectionPolygon,
    Shape,
    cross_section,
    flat_isometry_to_R2,
    nu_in_plane,
    section_edge_lengths,
    tau_in_plane,
    translate_to_origin,
    triangle_test,
)
from .sectors import (
    GeodesicCount,
    Sector,
    SphereSpec,
    check_geodesic,
    in_sector,
    is_cubic_diagonal,
    is_diagonal,
    is_geodesic_polyline,
    nu_ambient,
    sector_signature,
    tau,
    unique_geodesic_points,
    witness_two_geodesics,
)

__version__ = "0.1.0"
