"""Exact Ramanujan tau tables with identity checks, bound audits and statistics."""

from ._core import (
    CacheError,
    TauTable,
    audit_cancellation,
    check_deligne,
    check_identities,
    check_robin,
    check_t5,
    compute,
    evaluate_t5,
    factorize,
    faulhaber_coefficients,
    hecke_ratio_scan,
    implied_c,
    is_prime,
    loglog,
    lseries_compare,
    parse_table,
    power_sum_direct,
    power_sum_faulhaber,
    rankin,
    read_table,
    reconcile,
    run_cli,
    serialize_table,
    sieve_sigma,
    write_table,
)

__all__ = [
    "CacheError",
    "TauTable",
    "audit_cancellation",
    "check_deligne",
    "check_identities",
    "check_robin",
    "check_t5",
    "compute",
    "evaluate_t5",
    "factorize",
    "faulhaber_coefficients",
    "hecke_ratio_scan",
    "implied_c",
    "is_prime",
    "loglog",
    "lseries_compare",
    "parse_table",
    "power_sum_direct",
    "power_sum_faulhaber",
    "rankin",
    "read_table",
    "reconcile",
    "run_cli",
    "serialize_table",
    "sieve_sigma",
    "write_table",
]
