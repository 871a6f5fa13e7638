"""Exact combinatorics of Bell, Lah and Stirling numbers.

Every quantity is computed by at least two independent exact routes
(closed forms, recurrences, triangle schemes, brute-force enumeration,
truncated power series), so each route doubles as an oracle for the
others.  No floating point anywhere.
"""

from .bellpoly import (
    PartitionVector,
    bell_poly_eval,
    bell_poly_ones_is_stirling,
    bell_poly_scaling_check,
    enumerate_partition_vectors,
    faa_di_bruno_nth_derivative,
)
from .derivative import (
    exp_recip_derivative_formula,
    exp_recip_derivative_series_oracle,
    proof_identity_check,
    proof_rhs_series,
)
from .series import (
    Series,
    expm1_series,
    gf_bell_alternating_check,
    gf_bell_check,
    gf_stirling_check,
)
from .tables import (
    BELL_METHODS,
    ENUMERATION_CAP,
    BellCalculator,
    CrossCheckError,
    TriangleTable,
    bell_classic,
    bell_enumeration_oracle,
    bell_lah_stirling,
    bell_triangle,
    binomial,
    factorial,
    lah,
    lah_connection_check,
    lah_row_sum,
    restricted_growth_strings,
    stirling2_explicit,
    stirling2_recurrence,
)

__version__ = "0.1.0"

__all__ = [
    "BELL_METHODS",
    "ENUMERATION_CAP",
    "BellCalculator",
    "CrossCheckError",
    "PartitionVector",
    "Series",
    "TriangleTable",
    "bell_classic",
    "bell_enumeration_oracle",
    "bell_lah_stirling",
    "bell_poly_eval",
    "bell_poly_ones_is_stirling",
    "bell_poly_scaling_check",
    "bell_triangle",
    "binomial",
    "enumerate_partition_vectors",
    "exp_recip_derivative_formula",
    "exp_recip_derivative_series_oracle",
    "expm1_series",
    "faa_di_bruno_nth_derivative",
    "factorial",
    "gf_bell_alternating_check",
    "gf_bell_check",
    "gf_stirling_check",
    "lah",
    "lah_connection_check",
    "lah_row_sum",
    "proof_identity_check",
    "proof_rhs_series",
    "restricted_growth_strings",
    "stirling2_explicit",
    "stirling2_recurrence",
]
