"""
Tabular summaries of systems and claim audits.

Degree distributions and claim reports are collected into pandas frames so
they can be printed, exported to JSON or aggregated over a corpus.
"""

from typing import Dict, Iterable, List, Optional

import pandas as pd

from ..detection.girth import girth
from ..models.hypergraph import TripleSystem
from .claims import ClaimReport
from .counting import count_3links, count_paths3, count_rainbow_paths3, count_walks3


def degree_table(system: TripleSystem) -> pd.DataFrame:
    """
    Degree distribution of a system.

    Returns:
        DataFrame with columns ``degree`` and ``vertices``, ascending by degree
    """
    counts = pd.Series(system.degree_list(), dtype="int64").value_counts().sort_index()
    return pd.DataFrame({"degree": counts.index.astype("int64"), "vertices": counts.values})


def system_summary(system: TripleSystem) -> Dict[str, object]:
    """
    Headline statistics of a system.

    Rainbow path counts are only reported for linear systems; the average
    degree is given as an exact fraction string.
    """
    shadow = system.shadow()
    linear = shadow.owner is not None
    summary: Dict[str, object] = {
        "n": system.n,
        "m": system.m,
        "linear": linear,
        "d_avg": str(system.degrees().d_avg) if system.n else None,
        "d_max": max(system.degree_list(), default=0),
        "three_links": count_3links(system),
        "shadow_edges": shadow.size,
        "walks3": count_walks3(shadow),
        "paths3": count_paths3(shadow),
        "rainbow_paths3": count_rainbow_paths3(system) if linear else None,
    }
    shadow_girth = girth(shadow)
    summary["shadow_girth"] = None if shadow_girth == float("inf") else int(shadow_girth)
    return summary


def claims_frame(reports: Iterable[ClaimReport]) -> pd.DataFrame:
    """One row per claim report."""
    rows = [report.to_dict() for report in reports]
    columns = ["claim_id", "scope", "status", "lhs", "rhs", "slack", "witness",
               "instances", "hypothesis", "violation"]
    return pd.DataFrame(rows, columns=columns)


def corpus_summary(frames: Iterable[pd.DataFrame], label: Optional[str] = None) -> pd.DataFrame:
    """
    Aggregate claim frames from many systems.

    Args:
        frames: claims_frame outputs, one per system
        label: Optional corpus name stored in a ``corpus`` column

    Returns:
        One row per claim with the number of systems per status and the
        smallest slack seen on applicable systems
    """
    frames: List[pd.DataFrame] = list(frames)
    if not frames:
        return pd.DataFrame(columns=["claim_id", "PASS", "FAIL", "N/A", "min_slack"])
    combined = pd.concat(frames, ignore_index=True)
    status = combined.pivot_table(index="claim_id", columns="status", values="slack",
                                  aggfunc="count", fill_value=0)
    for name in ("PASS", "FAIL", "N/A"):
        if name not in status.columns:
            status[name] = 0
    applicable = combined[combined["status"] != "N/A"]
    min_slack = applicable.groupby("claim_id")["slack"].min()
    result = status[["PASS", "FAIL", "N/A"]].join(min_slack.rename("min_slack")).reset_index()
    result.columns.name = None
    if label is not None:
        result.insert(0, "corpus", label)
    return result
