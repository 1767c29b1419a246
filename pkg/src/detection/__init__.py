"""
Cycle detection for triple systems and girth for graphs.

This module contains the Berge and linear cycle finders, witness
verification, forbidden-family checks and the girth computation.
"""

from .engine import (
    DEFAULT_EXPANSION_BUDGET,
    CycleDetector,
    FamilyCheckReport,
    find_berge_cycle,
    find_linear_cycle,
    is_family_free,
    verify_witness,
)
from .girth import girth

__all__ = [
    "DEFAULT_EXPANSION_BUDGET",
    "CycleDetector",
    "FamilyCheckReport",
    "find_berge_cycle",
    "find_linear_cycle",
    "girth",
    "is_family_free",
    "verify_witness",
]
