"""Exact fixed-point enumeration and Poincare polynomials for moduli of
framed sheaves on (stacky) Hirzebruch surfaces."""

from .characters import (
    Character,
    IndexReport,
    WeightTerm,
    dimension,
    full_character,
    line_bundle_weights,
    morse_index_direct,
    reduced_character,
    young_pair_weights,
)
from .fixed_locus import (
    ChernData,
    FixedComponent,
    FullFixedPoint,
    SurfaceParams,
    components_up_to,
    enumerate_components,
    enumerate_full_fixed_points,
    full_fixed_points_up_to,
    is_admissible,
    minimal_discriminant,
    normalize_c1,
    quadratic_term,
)
from .partitions import Box, Partition, arm, enumerate_partitions, leg
from .poincare import (
    component_term,
    euler_characteristic,
    euler_generating_function,
    line_index_count,
    long_column_count,
    morse_index_closed_form,
    poincare_polynomial,
)
from .polynomials import IntPolynomial, q_binomial
from .series import BiSeries, eta_series, hilbert_scheme_series, theta_eta_series

__version__ = "0.1.0"

__all__ = [
    "Box",
    "BiSeries",
    "Character",
    "ChernData",
    "FixedComponent",
    "FullFixedPoint",
    "IndexReport",
    "IntPolynomial",
    "Partition",
    "SurfaceParams",
    "WeightTerm",
    "arm",
    "component_term",
    "components_up_to",
    "dimension",
    "enumerate_components",
    "enumerate_full_fixed_points",
    "enumerate_partitions",
    "eta_series",
    "euler_characteristic",
    "euler_generating_function",
    "full_character",
    "full_fixed_points_up_to",
    "hilbert_scheme_series",
    "is_admissible",
    "leg",
    "line_bundle_weights",
    "line_index_count",
    "long_column_count",
    "minimal_discriminant",
    "morse_index_closed_form",
    "morse_index_direct",
    "normalize_c1",
    "poincare_polynomial",
    "q_binomial",
    "quadratic_term",
    "reduced_character",
    "theta_eta_series",
    "young_pair_weights",
]
