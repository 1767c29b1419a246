"""
Exhaustive and random search over linear triple systems.

This module computes exact linear Turán numbers at small orders, generates
seeded random family-free systems and provides brute-force oracles.
"""

from .extremal import (
    EXACT_SEARCH_MAX_N,
    OrderlySearch,
    SearchResult,
    degree_cap,
    enumerate_linear_systems,
    exact_extremal,
)
from .oracle import ORACLE_MAX_N, brute_force_cycle, naive_extremal
from .random_systems import RANDOM_ATTEMPT_FACTOR, RNG_ALGORITHM, header_lines, random_corpus, random_linear_system

__all__ = [
    "EXACT_SEARCH_MAX_N",
    "ORACLE_MAX_N",
    "RANDOM_ATTEMPT_FACTOR",
    "RNG_ALGORITHM",
    "OrderlySearch",
    "SearchResult",
    "brute_force_cycle",
    "degree_cap",
    "enumerate_linear_systems",
    "exact_extremal",
    "header_lines",
    "naive_extremal",
    "random_corpus",
    "random_linear_system",
]
