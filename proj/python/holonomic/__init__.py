"""Exact analysis of P-recursive sequences.

Exact values are returned as ``int`` or ``fractions.Fraction``; reports are
plain dictionaries with the same layout as the ``holoseq --format json`` output.
"""

from ._holonomic import (
    CoverageError,
    DomainError,
    PreconditionError,
    apery_relative_error,
    audit_bounds,
    binomial,
    certify_nth_root,
    certify_ratio,
    characteristic_poly,
    classify_log_behavior,
    cli,
    guess_recurrence,
    natural_offset,
    puiseux_fit,
    r_order,
    recurrence,
    root_ratio_distances,
    roots,
    sequence,
    verify_recurrence,
)

__all__ = [
    "CoverageError",
    "DomainError",
    "PreconditionError",
    "apery_relative_error",
    "audit_bounds",
    "binomial",
    "certify_nth_root",
    "certify_ratio",
    "characteristic_poly",
    "classify_log_behavior",
    "cli",
    "guess_recurrence",
    "natural_offset",
    "puiseux_fit",
    "r_order",
    "recurrence",
    "root_ratio_distances",
    "roots",
    "sequence",
    "verify_recurrence",
]
