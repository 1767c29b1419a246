"""
Structural statistics and claim audits.

This module counts 3-links, walks and paths, builds garbage subsystems,
audits the degree and link inequalities and summarizes results in tables.
"""

from .claims import (
    C4_CLAIMS,
    C5_CLAIMS,
    CLAIMS,
    CONTEXTS,
    ClaimAudit,
    ClaimId,
    ClaimReport,
    ClaimScope,
    ClaimStatus,
    Hypothesis,
    LINEAR_CLAIMS,
    check_claim,
    check_claims,
)
from .counting import (
    ThreeLink,
    count_3links,
    count_3links_at,
    count_nonrainbow_paths3,
    count_paths3,
    count_rainbow_paths3,
    count_walks3,
    rainbow_paths,
    three_links,
)
from .garbage import EdgeDecomposition, garbage_reasons, garbage_subhypergraph, kept_edges
from .summary import claims_frame, corpus_summary, degree_table, system_summary

__all__ = [
    "C4_CLAIMS",
    "C5_CLAIMS",
    "CLAIMS",
    "CONTEXTS",
    "ClaimAudit",
    "ClaimId",
    "ClaimReport",
    "ClaimScope",
    "ClaimStatus",
    "EdgeDecomposition",
    "Hypothesis",
    "LINEAR_CLAIMS",
    "ThreeLink",
    "check_claim",
    "check_claims",
    "claims_frame",
    "corpus_summary",
    "count_3links",
    "count_3links_at",
    "count_nonrainbow_paths3",
    "count_paths3",
    "count_rainbow_paths3",
    "count_walks3",
    "degree_table",
    "garbage_reasons",
    "garbage_subhypergraph",
    "kept_edges",
    "rainbow_paths",
    "system_summary",
    "three_links",
]
