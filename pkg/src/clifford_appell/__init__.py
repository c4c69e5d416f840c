"""Exact construction of shifted Appell sequences of monogenic polynomials
with values in the Clifford algebra R_{0,m}."""

from .algebra import (
    Multivector,
    blade_from_indices,
    blade_indices,
    blade_product,
    get_max_generators,
    mv_add,
    mv_conjugate,
    mv_mul,
    set_max_generators,
)
from .construction import (
    FischerComponents,
    ShiftedAppellSequence,
    appell_term,
    appell_term_closed_form,
    beta,
    ck_extension,
    fischer_decompose,
    lambda_coeff,
    mu,
    random_monogenic,
    shifted_appell_sequence,
    vector_power,
    vector_variable,
)
from .errors import (
    DependsOnX0Error,
    DimensionError,
    NotHomogeneousError,
    NotMonogenicError,
    ParseError,
    PreconditionError,
)
from .operators import (
    cauchy_riemann,
    cauchy_riemann_conjugate,
    dirac,
    hypercomplex_derivative,
    is_dirac_monogenic,
    is_monogenic,
    laplacian,
)
from .poly import (
    ZERO_DEGREE,
    CliffordPolynomial,
    evaluate,
    homogeneous_components,
    partial_derivative,
    poly_add,
    poly_from_json,
    poly_mul,
    poly_scale,
    poly_to_json,
    restrict_x0,
)

__all__ = [
    "Multivector",
    "blade_from_indices",
    "blade_indices",
    "blade_product",
    "get_max_generators",
    "mv_add",
    "mv_conjugate",
    "mv_mul",
    "set_max_generators",
    "FischerComponents",
    "ShiftedAppellSequence",
    "appell_term",
    "appell_term_closed_form",
    "beta",
    "ck_extension",
    "fischer_decompose",
    "lambda_coeff",
    "mu",
    "random_monogenic",
    "shifted_appell_sequence",
    "vector_power",
    "vector_variable",
    "DependsOnX0Error",
    "DimensionError",
    "NotHomogeneousError",
    "NotMonogenicError",
    "ParseError",
    "PreconditionError",
    "cauchy_riemann",
    "cauchy_riemann_conjugate",
    "dirac",
    "hypercomplex_derivative",
    "is_dirac_monogenic",
    "is_monogenic",
    "laplacian",
    "ZERO_DEGREE",
    "CliffordPolynomial",
    "evaluate",
    "homogeneous_components",
    "partial_derivative",
    "poly_add",
    "poly_from_json",
    "poly_mul",
    "poly_scale",
    "poly_to_json",
    "restrict_x0",
]

__version__ = "0.1.0"
