"""Polar curves and polar families of plane webs and foliations."""

from .errors import (
    DegenerateSampleError,
    InfiniteZeroSetError,
    InternalInvariantError,
    NumericAbortError,
    ParseError,
    PolarwebError,
    PolynomialError,
    WebValidationError,
)
from .foliation import (
    FoliationData,
    class_of_curve,
    classify_singularity,
    inflexion_divisor,
    is_inflexion_point,
)
from .localsing import (
    CurveGerm,
    GermFingerprint,
    branch_count,
    fingerprint,
    genus_of_curve,
    intersection_multiplicity,
    local_multiplicity,
    milnor_number,
    multiplicity_sequence,
)
from .mpoly import (
    MPoly,
    Rational,
    discriminant_binary,
    gcd_squarefree,
    jet_decompose,
    poly_gcd,
    resultant,
    squarefree_part,
)
from .polarops import (
    PolarFamily,
    RadialProduct,
    family_degree,
    family_dimension,
    polar_curve,
    polar_equality_criterion,
    polar_family,
)
from .webmodel import (
    AffinePoint,
    Direction,
    PlaneCurve,
    SymWeb,
    discriminant_curve,
    foliation_web,
    is_smooth_point,
    radial_web,
    singular_set,
    superpose,
    tangent_directions,
    web_degree,
)

__all__ = [
    "AffinePoint",
    "CurveGerm",
    "DegenerateSampleError",
    "Direction",
    "FoliationData",
    "GermFingerprint",
    "InfiniteZeroSetError",
    "InternalInvariantError",
    "MPoly",
    "NumericAbortError",
    "ParseError",
    "PlaneCurve",
    "PolarFamily",
    "PolarwebError",
    "PolynomialError",
    "RadialProduct",
    "Rational",
    "SymWeb",
    "WebValidationError",
    "branch_count",
    "class_of_curve",
    "classify_singularity",
    "discriminant_binary",
    "discriminant_curve",
    "family_degree",
    "family_dimension",
    "fingerprint",
    "foliation_web",
    "gcd_squarefree",
    "genus_of_curve",
    "inflexion_divisor",
    "intersection_multiplicity",
    "is_inflexion_point",
    "is_smooth_point",
    "jet_decompose",
    "local_multiplicity",
    "milnor_number",
    "multiplicity_sequence",
    "polar_curve",
    "polar_equality_criterion",
    "polar_family",
    "poly_gcd",
    "radial_web",
    "resultant",
    "singular_set",
    "squarefree_part",
    "superpose",
    "tangent_directions",
    "web_degree",
]
