"""
Extremal constructions and bound formulas.

This module contains the host graph generators, the layered lift of a
bipartite host into a linear triple system and the bound calculators.
"""

from .bounds import (
    RELATIVE_TOLERANCE,
    ConstructionPlan,
    c4_degree_bound,
    c4_upper_bound,
    c5_degree_bound,
    c5_upper_bound,
    corollary_alpha,
    corollary_bound,
    fit_plan_to_host,
    lower_bound_value,
    luw_exponent,
    plan_parameters,
    relative_error,
)
from .builders import BlockLayout, construct_c5free, construct_from_bipartite, construct_planned
from .generators import (
    MAX_PROJECTIVE_PRIME,
    PROJECTIVE_GIRTH,
    gen_complete_bipartite,
    gen_projective_incidence,
    is_prime,
)

__all__ = [
    "MAX_PROJECTIVE_PRIME",
    "PROJECTIVE_GIRTH",
    "RELATIVE_TOLERANCE",
    "BlockLayout",
    "ConstructionPlan",
    "c4_degree_bound",
    "c4_upper_bound",
    "c5_degree_bound",
    "c5_upper_bound",
    "construct_c5free",
    "construct_from_bipartite",
    "construct_planned",
    "corollary_alpha",
    "corollary_bound",
    "fit_plan_to_host",
    "gen_complete_bipartite",
    "gen_projective_incidence",
    "is_prime",
    "lower_bound_value",
    "luw_exponent",
    "plan_parameters",
    "relative_error",
]
