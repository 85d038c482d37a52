"""Balanced pairing of the half system modulo a prime p = 1 (mod 4)."""

from .balanced_search import (
    GeneralMatching,
    SearchResult,
    classify_general,
    enumerate_all,
    feasibility_precheck,
    from_prime,
    search,
)
from .identity_suite import CHECKS, run_checks
from .modular_core import (
    PrimeContext,
    QuarticSignature,
    alpha_beta,
    half_factorial_t,
    half_reduce,
    is_prime,
    legendre,
    prime_context,
    primitive_root,
    quartic_character,
)
from .pairing import (
    ClassCounts,
    Pairing,
    build_pairing,
    classify,
    gamma,
    gauss_count,
    partner_difference_check,
    s_prime,
    v2_count,
)
from .report import CheckReport

__version__ = "0.1.0"
