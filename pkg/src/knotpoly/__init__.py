"""Exact computations for torus knots and their satellites.

The package provides integer Laurent polynomial arithmetic, symmetrized
Alexander polynomials of torus and satellite knots, a coefficient-based
obstruction to L-space surgeries on satellites, Newton polygons and
torus knot detection for enhanced A-polynomials, and a numerically
verified peripheral-curve gluing construction for SL(2, C)
representations.
"""

from .apolygon import (
    INFINITE_SLOPE,
    BiPoly,
    DetectionResult,
    NewtonPolygon,
    ThinnessResult,
    coprime_factorizations,
    detect_torus_from_apoly,
    detect_with_degree,
    detectability,
    edge_boundary_slopes,
    newton_polygon,
    thinness,
)
from .laurent import LaurentPoly, NonExactDivision, NotSymmetrizable
from .repglue import (
    DEFAULT_TOL,
    Extension,
    GlueInstance,
    Mat2C,
    PeripheralPair,
    VerifyResult,
    choose_k,
    classify_case,
    construct_extension,
    diagonal_polar_data,
    glue_instance,
    sample_instance,
    verify_extension,
)
from .satellite import (
    AdmissibilityReport,
    ObstructionResult,
    PredictionMismatch,
    SatelliteSpec,
    WindingCheck,
    lspace_admissible,
    satellite_alexander,
    satellite_genus,
    torus_satellite_obstruction,
    winding_violation,
)
from .torusknot import (
    TorusKnotSpec,
    abelian_slope_family,
    alexander,
    enhanced_apoly,
    genus,
    leading_form,
    parse_spec,
)

__all__ = [
    "INFINITE_SLOPE",
    "BiPoly",
    "DetectionResult",
    "NewtonPolygon",
    "ThinnessResult",
    "coprime_factorizations",
    "detect_torus_from_apoly",
    "detect_with_degree",
    "detectability",
    "edge_boundary_slopes",
    "newton_polygon",
    "thinness",
    "LaurentPoly",
    "NonExactDivision",
    "NotSymmetrizable",
    "DEFAULT_TOL",
    "Extension",
    "GlueInstance",
    "Mat2C",
    "PeripheralPair",
    "VerifyResult",
    "choose_k",
    "classify_case",
    "construct_extension",
    "diagonal_polar_data",
    "glue_instance",
    "sample_instance",
    "verify_extension",
    "AdmissibilityReport",
    "ObstructionResult",
    "PredictionMismatch",
    "SatelliteSpec",
    "WindingCheck",
    "lspace_admissible",
    "satellite_alexander",
    "satellite_genus",
    "torus_satellite_obstruction",
    "winding_violation",
    "TorusKnotSpec",
    "abelian_slope_family",
    "alexander",
    "enhanced_apoly",
    "genus",
    "leading_form",
    "parse_spec",
    "__version__",
]

__version__ = "0.1.0"
