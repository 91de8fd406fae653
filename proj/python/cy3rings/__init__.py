"""Graded-ring constructions of polarised Calabi-Yau 3-fold orbifolds.

Hilbert-series assembly from orbifold Riemann-Roch data, recognition of
weighted-projective embeddings, Pfaffian degree calculus with Tom/Jerry
format checks, node counting, Euler-characteristic bookkeeping and the
projection web between candidate families.  All arithmetic is exact.
"""

try:
    from ._core import (
        assemble,
        build_web,
        check_format,
        chi_conifold,
        chi_contract_plane,
        chi_crepant_third,
        ci_series,
        determinantal_length,
        expand,
        fit_resolution_shape,
        maximal_pfaffians,
        pfaffian_degrees,
        recognize,
        search,
        series_equal,
        sign_changes,
        standard_choice_nodes,
        unproject_term,
        weighted_bezout,
        DomainError,
        ParseError,
    )
except ImportError:  # in-tree layout: extension built outside the package
    from _core import (
        assemble,
        build_web,
        check_format,
        chi_conifold,
        chi_contract_plane,
        chi_crepant_third,
        ci_series,
        determinantal_length,
        expand,
        fit_resolution_shape,
        maximal_pfaffians,
        pfaffian_degrees,
        recognize,
        search,
        series_equal,
        sign_changes,
        standard_choice_nodes,
        unproject_term,
        weighted_bezout,
        DomainError,
        ParseError,
    )

__all__ = [
    "assemble",
    "build_web",
    "check_format",
    "chi_conifold",
    "chi_contract_plane",
    "chi_crepant_third",
    "ci_series",
    "determinantal_length",
    "expand",
    "fit_resolution_shape",
    "maximal_pfaffians",
    "pfaffian_degrees",
    "recognize",
    "search",
    "series_equal",
    "sign_changes",
    "standard_choice_nodes",
    "unproject_term",
    "weighted_bezout",
    "DomainError",
    "ParseError",
]

__version__ = "0.1.0"
