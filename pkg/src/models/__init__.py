"""
Data models for the hypergraph toolkit.

This module contains the TripleSystem, BipartiteGraph and ShadowGraph
structures, cycle witnesses and forbidden-family specifications.
"""

from .errors import BudgetExceededError, FormatError, HypergraphError, ValidationError
from .graph import BipartiteGraph, ShadowGraph
from .hypergraph import DegreeProfile, TripleSystem, canonical_triple
from .cycles import (
    BergeCycleWitness,
    CycleKind,
    CycleWitness,
    FamilyEntry,
    FamilySpec,
    LinearCycleWitness,
    make_witness,
)

__all__ = [
    "BergeCycleWitness",
    "BipartiteGraph",
    "BudgetExceededError",
    "CycleKind",
    "CycleWitness",
    "DegreeProfile",
    "FamilyEntry",
    "FamilySpec",
    "FormatError",
    "HypergraphError",
    "LinearCycleWitness",
    "ShadowGraph",
    "TripleSystem",
    "ValidationError",
    "canonical_triple",
    "make_witness",
]
