"""Exact constant-term extraction for rational functions in iterated
Laurent series fields: partial fractions, the Omega operators of
partition analysis, generalized Dedekind sums, and truncated-series
lattice-path pipelines, all over exact rational arithmetic."""

from .laurent import LaurentPolynomial
from .ordering import Monomial, VariableOrder, classify_factor, FactorClass
from .unipoly import (
    UPoly,
    extended_gcd,
    poly_divmod,
    poly_gcd,
    series_inverse,
)
from .fields import QuotientFieldElement, RationalFunction
from .elliott import BinomialFactor, ElliottRational
from .ppfraction import (
    FracPart,
    PPFraction,
    conjugated_frac,
    frac_at,
    frac_at_origin,
    frac_at_prime,
    full_pfd_linear,
    polynomial_part_by_reversal,
    power_split,
    ppfraction_split,
)
from .omega import (
    DiophantineSystem,
    check_reciprocity,
    crude_gf,
    ct_lambda,
    elliott_reduce,
    lambda_names,
    make_system,
    monomial_substitute_ct_check,
    omega_ct,
    omega_geq,
    pt_lambda_at_one,
    series_matches_table,
    solution_gf,
    split_parts,
)
from .ctrational import ct_rational, hadamard, series_coefficients
from .dedekind import (
    DedekindInstance,
    ReciprocityReport,
    dedekind_sum,
    generalized_sum,
    reciprocity_check,
)
from .serieslab import (
    StepSet,
    ThirdDecomposition,
    TruncatedSeries,
    catalan_diagonal_paths,
    coefficient_part,
    divided_difference,
    dyck_bounded,
    dyck_height_coefficient,
    elliott_derivative,
    evaluate_at_series,
    geometric_series,
    lagrange_ct,
    laurent_series_coefficient,
    positive_root,
    quarter_plane_symmetric,
    series_from_rational,
    slit_full_series,
    slit_plane,
    third_decomposition,
)

__version__ = "1.0.0"

__all__ = [
    "BinomialFactor",
    "DedekindInstance",
    "DiophantineSystem",
    "ElliottRational",
    "FactorClass",
    "FracPart",
    "LaurentPolynomial",
    "Monomial",
    "PPFraction",
    "QuotientFieldElement",
    "RationalFunction",
    "ReciprocityReport",
    "StepSet",
    "ThirdDecomposition",
    "TruncatedSeries",
    "UPoly",
    "VariableOrder",
    "catalan_diagonal_paths",
    "check_reciprocity",
    "classify_factor",
    "coefficient_part",
    "conjugated_frac",
    "crude_gf",
    "ct_lambda",
    "ct_rational",
    "dedekind_sum",
    "divided_difference",
    "dyck_bounded",
    "dyck_height_coefficient",
    "elliott_derivative",
    "elliott_reduce",
    "evaluate_at_series",
    "extended_gcd",
    "frac_at",
    "frac_at_origin",
    "frac_at_prime",
    "full_pfd_linear",
    "generalized_sum",
    "geometric_series",
    "hadamard",
    "lagrange_ct",
    "lambda_names",
    "laurent_series_coefficient",
    "make_system",
    "monomial_substitute_ct_check",
    "omega_ct",
    "omega_geq",
    "poly_divmod",
    "poly_gcd",
    "polynomial_part_by_reversal",
    "positive_root",
    "power_split",
    "ppfraction_split",
    "pt_lambda_at_one",
    "quarter_plane_symmetric",
    "reciprocity_check",
    "series_coefficients",
    "series_from_rational",
    "series_inverse",
    "series_matches_table",
    "slit_full_series",
    "slit_plane",
    "solution_gf",
    "split_parts",
    "third_decomposition",
]
