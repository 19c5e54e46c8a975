"""Counts of permutations avoiding (1,2,3) and a layered pattern, with the
Chebyshev generating functions R_k and exhaustive verification suites.

Permutations are lists of ints (or text such as "2143" / "2,1,4,3"); pattern
sets are lists of permutations (or text such as "123;2143"). Counts are exact
Python ints.
"""

from ._core import (
    DEFAULT_MAX_LENGTH,
    SCHEMA_VERSION,
    Checker,
    ResourceLimitError,
    avoids_all,
    catalan,
    catalan_identity_check,
    cheb_poly,
    chebyshev_u_via_poly,
    contains,
    count_avoiders,
    count_series,
    expand,
    layer_decomposition,
    layered,
    layered_pair,
    parse_pattern_set,
    parse_permutation,
    predicted_series,
    r_k_gf,
    run_cli,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_MAX_LENGTH",
    "SCHEMA_VERSION",
    "Checker",
    "ResourceLimitError",
    "avoids_all",
    "catalan",
    "catalan_identity_check",
    "cheb_poly",
    "chebyshev_u_via_poly",
    "contains",
    "count_avoiders",
    "count_series",
    "expand",
    "layer_decomposition",
    "layered",
    "layered_pair",
    "parse_pattern_set",
    "parse_permutation",
    "predicted_series",
    "r_k_gf",
    "run_cli",
]
