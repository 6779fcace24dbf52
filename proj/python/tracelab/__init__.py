"""Trace ideals, syzygies and Ulrich certificates.

Thin package over the compiled extension; everything lives in ``_core``.
"""

from tracelab._core import (
    Algebra,
    Ideal,
    Module,
    ModuleSum,
    Semigroup,
    colon,
    endomorphism_ring,
    enumerate_normalized_ideals,
    enumerate_semigroups,
    is_full_trace,
    is_nearly_gorenstein,
    is_ulrich,
    isomorphism_shift,
    koszul_betti,
    koszul_check,
    maximal_ideal_power,
    minimal_generators,
    monomial_quotient,
    mu,
    run_suites,
    trace,
    trace_of_sum,
    trace_over_endomorphism_ring,
)

__all__ = [
    "Algebra",
    "Ideal",
    "Module",
    "ModuleSum",
    "Semigroup",
    "colon",
    "endomorphism_ring",
    "enumerate_normalized_ideals",
    "enumerate_semigroups",
    "is_full_trace",
    "is_nearly_gorenstein",
    "is_ulrich",
    "isomorphism_shift",
    "koszul_betti",
    "koszul_check",
    "maximal_ideal_power",
    "minimal_generators",
    "monomial_quotient",
    "mu",
    "run_suites",
    "trace",
    "trace_of_sum",
    "trace_over_endomorphism_ring",
]
