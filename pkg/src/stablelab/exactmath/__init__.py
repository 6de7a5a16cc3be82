"""Exact rational, valuation, polynomial, resultant and Newton-polygon kit."""

from .poly import (
    Monomial,
    SymbolicPolynomial,
    ValuedSymbol,
    coeffs_to_poly,
    inverse_mod,
    normal_form,
    poly_to_coeffs,
    sym,
    univariate_divmod,
    univariate_gcd,
)
from .polygon import (
    NewtonPolygon,
    ParamPolygon,
    PolygonCell,
    newton_polygon,
    parametric_polygon,
)
from .resultant import (
    bareiss_determinant,
    difference_root_resultant,
    interpolate_integer_polynomial,
    resultant,
    resultant_coeffs,
    sylvester_matrix,
)
from .valuation import (
    INF,
    Affine,
    ExtValuation,
    MinValuation,
    affine,
    envelope_breakpoints,
    envelope_min,
    field_valuation,
    is_finite,
    min_valuation,
    monomial_valuation,
    param_valuations,
    val_rat,
)

__all__ = [
    "Affine",
    "ExtValuation",
    "INF",
    "MinValuation",
    "Monomial",
    "NewtonPolygon",
    "ParamPolygon",
    "PolygonCell",
    "SymbolicPolynomial",
    "ValuedSymbol",
    "affine",
    "bareiss_determinant",
    "coeffs_to_poly",
    "difference_root_resultant",
    "envelope_breakpoints",
    "envelope_min",
    "field_valuation",
    "interpolate_integer_polynomial",
    "inverse_mod",
    "is_finite",
    "min_valuation",
    "monomial_valuation",
    "newton_polygon",
    "normal_form",
    "param_valuations",
    "parametric_polygon",
    "poly_to_coeffs",
    "resultant",
    "resultant_coeffs",
    "sym",
    "sylvester_matrix",
    "univariate_divmod",
    "univariate_gcd",
    "val_rat",
]
