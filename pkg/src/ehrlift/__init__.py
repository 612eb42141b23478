"""Exact weighted Ehrhart theory: counts, series, lifting polytopes and checks."""

__version__ = "0.1.0"

from .algebra import (
    LaurentPoly,
    RationalSeries,
    VarSet,
    invert_variables,
    q_derivative_at_one,
    series_equal,
    set_to_one,
    specialize,
    substitute_monomial,
    truncate,
)
from .errors import CheckFailed, EhrliftError, GuardExceeded, IllPosedSpecialization, InputError
from .kernels import BACKEND
from .lift import construct_H_Pw, hilbert_basis, lift_q, lift_r
from .polytope import Polytope, integrate_monomial, standard_polytopes
from .series import (
    interior_q_series,
    q_weighted_series,
    r_weighted_series,
    reciprocity_check_q,
    s_reciprocity_check,
    s_weighted_series,
)
from .triangulation import all_triangulations, triangulate
from .weights import ExpPolyWeight, LinearForm, MonomialWeight, PolynomialWeight, WeightSystem
from .verify import count_weighted, ehrhart_polynomial, interpolate, run_battery, series_from_poly

__all__ = [
    "__version__",
    "LaurentPoly",
    "RationalSeries",
    "VarSet",
    "invert_variables",
    "q_derivative_at_one",
    "series_equal",
    "set_to_one",
    "specialize",
    "substitute_monomial",
    "truncate",
    "CheckFailed",
    "EhrliftError",
    "GuardExceeded",
    "IllPosedSpecialization",
    "InputError",
    "BACKEND",
    "construct_H_Pw",
    "hilbert_basis",
    "lift_q",
    "lift_r",
    "Polytope",
    "integrate_monomial",
    "standard_polytopes",
    "interior_q_series",
    "q_weighted_series",
    "r_weighted_series",
    "reciprocity_check_q",
    "s_reciprocity_check",
    "s_weighted_series",
    "all_triangulations",
    "triangulate",
    "ExpPolyWeight",
    "LinearForm",
    "MonomialWeight",
    "PolynomialWeight",
    "WeightSystem",
    "count_weighted",
    "ehrhart_polynomial",
    "interpolate",
    "run_battery",
    "series_from_poly",
]
