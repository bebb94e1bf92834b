"""Exact construction and certification of antipodal spherical codes.

All exact quantities are returned as :class:`fractions.Fraction`.
"""

from ._core import (
    AntipodalityError,
    DomainError,
    HarmonicCodesError,
    IoError,
    antipodal_representatives,
    build_gram,
    candidate_parameters,
    certify,
    certify_gram,
    constant_modulus_scan,
    design_strength,
    e8_roots,
    evaluate_gegenbauer,
    float_coordinates,
    gegenbauer,
    harmonic_dimension,
    quadratic_bound,
    spectrum,
)

__all__ = [
    "AntipodalityError",
    "DomainError",
    "HarmonicCodesError",
    "IoError",
    "antipodal_representatives",
    "build_gram",
    "candidate_parameters",
    "certify",
    "certify_gram",
    "constant_modulus_scan",
    "design_strength",
    "e8_roots",
    "evaluate_gegenbauer",
    "float_coordinates",
    "gegenbauer",
    "harmonic_dimension",
    "quadratic_bound",
    "spectrum",
]
