"""Commutation semigroups P(D_m) and Lambda(D_m) of dihedral groups."""

from ._core import (
    ConsistencyError,
    ParameterError,
    ResourceError,
    VerificationError,
    __version__,
    central_series_orders,
    close_pairs,
    closure_size,
    decompose,
    iso_prime_criterion,
    iso_search,
    orbit_profile,
    order,
    order_report,
    table,
    table_csv,
    verify_claims,
)

__all__ = [
    "ConsistencyError",
    "ParameterError",
    "ResourceError",
    "VerificationError",
    "__version__",
    "central_series_orders",
    "close_pairs",
    "closure_size",
    "decompose",
    "iso_prime_criterion",
    "iso_search",
    "orbit_profile",
    "order",
    "order_report",
    "table",
    "table_csv",
    "verify_claims",
]
