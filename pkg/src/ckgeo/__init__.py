"""Uniform metric geometry over signatures of characteristics in {-1, 0, 1}.

A signature (k_1, ..., k_n) selects one of the 3^n constant-curvature
geometries of dimension n (elliptic, Euclidean, hyperbolic, Galilean,
Minkowski, de Sitter, and the rest).  The package computes distances, angles
between flats, generalized rotations, triangle relations, and Monte-Carlo
volumes with single code paths valid across all signatures, including the
degenerate ones.
"""

from .errors import (
    DegenerateTriangle,
    DimensionMismatch,
    DomainError,
    GeometryError,
    InconsistentPair,
    NegativeNorm,
    NonDivisible,
    NoSolution,
    OnAbsolute,
    PoleError,
    SingularBasis,
)
from .kernel import (
    Monomial,
    check_signature,
    cumulative_products,
    format_signature,
    parse_signature,
    plane_cross_coeff,
    plane_dot_coeff,
    plane_tables,
    point_cross_coeff,
    point_cross_table,
)
from .gtrig import gcos, gmeasure_from_cs, gsin, gtan
from .entity import Imaginary, MPlane, ProjPoint, Space
from .transform import (
    GOrthoTransform,
    ValidationReport,
    apply_plane,
    apply_point,
    block_kind,
    compose,
    from_word,
    givens,
    identity,
    inverse,
    random_transform,
    reflect,
    validate,
)
from .metric import (
    DISPUTED_LAWS,
    LAW_KEYS,
    LawReport,
    Measure,
    RightTriangleReport,
    Triangle,
    TriangleMeasurements,
    angle,
    distance,
    identified_distance,
    is_orthogonal,
    is_parallel,
    law_residuals,
    measure_triangle,
    right_triangle_residuals,
    solve_sas,
    triangle_from_sas,
)
from .volume import GeodesicSimplex, VolumeEstimate, cone_contains, mc_volume

__version__ = "0.1.0"

__all__ = [
    "DegenerateTriangle",
    "DimensionMismatch",
    "DomainError",
    "GeometryError",
    "InconsistentPair",
    "NegativeNorm",
    "NonDivisible",
    "NoSolution",
    "OnAbsolute",
    "PoleError",
    "SingularBasis",
    "Monomial",
    "check_signature",
    "cumulative_products",
    "format_signature",
    "parse_signature",
    "plane_cross_coeff",
    "plane_dot_coeff",
    "plane_tables",
    "point_cross_coeff",
    "point_cross_table",
    "gcos",
    "gmeasure_from_cs",
    "gsin",
    "gtan",
    "Imaginary",
    "MPlane",
    "ProjPoint",
    "Space",
    "GOrthoTransform",
    "ValidationReport",
    "apply_plane",
    "apply_point",
    "block_kind",
    "compose",
    "from_word",
    "givens",
    "identity",
    "inverse",
    "random_transform",
    "reflect",
    "validate",
    "DISPUTED_LAWS",
    "LAW_KEYS",
    "LawReport",
    "Measure",
    "RightTriangleReport",
    "Triangle",
    "TriangleMeasurements",
    "angle",
    "distance",
    "identified_distance",
    "is_orthogonal",
    "is_parallel",
    "law_residuals",
    "measure_triangle",
    "right_triangle_residuals",
    "solve_sas",
    "triangle_from_sas",
    "GeodesicSimplex",
    "VolumeEstimate",
    "cone_contains",
    "mc_volume",
    "__version__",
]
