"""
Cycle detection engine for triple systems.

This module contains the depth-first search that finds Berge cycles and
linear cycles of an exact length, certifies the result as a witness and
checks systems against forbidden cycle families.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, List, Optional, Set, Tuple

from ..models.cycles import (
    BergeCycleWitness,
    CycleKind,
    CycleWitness,
    FamilyEntry,
    FamilySpec,
    LinearCycleWitness,
    make_witness,
)
from ..models.errors import BudgetExceededError, ValidationError
from ..models.hypergraph import TripleSystem

logger = logging.getLogger(__name__)

# Node expansions allowed per detector before giving up
DEFAULT_EXPANSION_BUDGET = 10 ** 8


@dataclass(frozen=True)
class FamilyCheckReport:
    """Outcome of checking a system against a forbidden family."""

    free: bool
    first_violation: Optional[Tuple[FamilyEntry, CycleWitness]] = None
    expansions: int = 0

    @property
    def witness(self) -> Optional[CycleWitness]:
        """The witness of the first violation, if any."""
        return self.first_violation[1] if self.first_violation else None


class CycleDetector:
    """
    Exhaustive search for cycles in a fixed triple system.

    The search is anchored at an edge h1 which is the smallest edge index of
    the cycle, with v1 < v2 chosen from h1 so each cycle is reached in one
    orientation only. It then extends by (edge, vertex) pairs in ascending
    order while keeping vertices and edges distinct. For linear cycles the
    intersection pattern with all previously chosen edges is checked as
    each edge is added.

    Attributes:
        system: The host triple system
        budget: Maximum node expansions before BudgetExceededError
        expansions: Expansions performed so far (cumulative)
    """

    def __init__(self, system: TripleSystem, budget: int = DEFAULT_EXPANSION_BUDGET):
        """
        Initialize the detector.

        Args:
            system: The triple system to search
            budget: Node-expansion budget shared by all searches on this detector
        """
        self.system = system
        self.budget = budget
        self.expansions = 0
        self._sets = system.edge_sets
        self._incidence = system.incidence

    def find_berge_cycle(self, k: int, through_edge: Optional[int] = None) -> Optional[BergeCycleWitness]:
        """
        Find a Berge cycle of length exactly k.

        Args:
            k: Cycle length, at least 2
            through_edge: If given, only cycles using this edge are sought

        Returns:
            The first witness in search order, or None if there is none

        Raises:
            ValidationError: If k < 2 or through_edge is not an edge index
            BudgetExceededError: If the budget runs out before a decision
        """
        return self.find_cycle(CycleKind.BERGE, k, through_edge)

    def find_linear_cycle(self, k: int, through_edge: Optional[int] = None) -> Optional[LinearCycleWitness]:
        """
        Find a linear cycle of length exactly k.

        Args:
            k: Cycle length, at least 3
            through_edge: If given, only cycles using this edge are sought

        Returns:
            The first witness in search order, or None if there is none
        """
        return self.find_cycle(CycleKind.LINEAR, k, through_edge)

    def find_cycle(self, kind: CycleKind, k: int, through_edge: Optional[int] = None) -> Optional[CycleWitness]:
        """Find a cycle of the given kind and exact length."""
        if k < kind.min_length:
            raise ValidationError(f"{kind.value} cycles need length >= {kind.min_length}, got {k}")
        if through_edge is not None:
            if not 0 <= through_edge < self.system.m:
                raise ValidationError(f"edge index {through_edge} is out of range")
            anchors = [through_edge]
        else:
            anchors = list(range(self.system.m))

        for anchor in anchors:
            found = self._search_anchor(kind, k, anchor, minimal=through_edge is None)
            if found is not None:
                vertices, edges = found
                logger.debug("found %s C%d at anchor %d after %d expansions",
                             kind.value, k, anchor, self.expansions)
                return make_witness(kind, vertices, edges)
        return None

    def is_family_free(self, family: FamilySpec, through_edge: Optional[int] = None) -> FamilyCheckReport:
        """
        Check the system against every member of a family.

        Members are tried in increasing length order and the check stops at
        the first witness.
        """
        start = self.expansions
        for entry in family:
            witness = self.find_cycle(entry.kind, entry.length, through_edge)
            if witness is not None:
                return FamilyCheckReport(False, (entry, witness), self.expansions - start)
        return FamilyCheckReport(True, None, self.expansions - start)

    def _tick(self) -> None:
        self.expansions += 1
        if self.expansions > self.budget:
            raise BudgetExceededError(self.budget, self.expansions, "cycle detection")

    def _search_anchor(
        self, kind: CycleKind, k: int, anchor: int, minimal: bool
    ) -> Optional[Tuple[List[int], List[int]]]:
        for v1, v2 in combinations(self.system.edges[anchor], 2):
            self._tick()
            vertices = [v1, v2]
            found = self._extend(kind, k, anchor, minimal, vertices, [anchor], {v1, v2}, {anchor})
            if found is not None:
                return found
        return None

    def _extend(
        self,
        kind: CycleKind,
        k: int,
        anchor: int,
        minimal: bool,
        vertices: List[int],
        chosen: List[int],
        used_vertices: Set[int],
        used_edges: Set[int],
    ) -> Optional[Tuple[List[int], List[int]]]:
        # vertices holds v1..vi and chosen holds h1..h(i-1); pick hi next
        closing = len(vertices) == k
        for e in self._incidence[vertices[-1]]:
            if e in used_edges or (minimal and e < anchor):
                continue
            members = self._sets[e]
            if closing and vertices[0] not in members:
                continue
            if kind is CycleKind.LINEAR and not self._fits_linear(members, vertices, chosen, closing):
                continue
            self._tick()
            if closing:
                return list(vertices), chosen + [e]

            chosen.append(e)
            used_edges.add(e)
            for w in self.system.edges[e]:
                if w in used_vertices:
                    continue
                vertices.append(w)
                used_vertices.add(w)
                found = self._extend(kind, k, anchor, minimal, vertices, chosen, used_vertices, used_edges)
                if found is not None:
                    return found
                vertices.pop()
                used_vertices.discard(w)
            chosen.pop()
            used_edges.discard(e)
        return None

    def _fits_linear(
        self, members: FrozenSet[int], vertices: List[int], chosen: List[int], closing: bool
    ) -> bool:
        if members & self._sets[chosen[-1]] != {vertices[-1]}:
            return False
        for position in range(len(chosen) - 1):
            overlap = members & self._sets[chosen[position]]
            if closing and position == 0:
                if overlap != {vertices[0]}:
                    return False
            elif overlap:
                return False
        return True


def find_berge_cycle(
    system: TripleSystem, k: int, budget: int = DEFAULT_EXPANSION_BUDGET, through_edge: Optional[int] = None
) -> Optional[BergeCycleWitness]:
    """Find a Berge cycle of length exactly k (see CycleDetector)."""
    return CycleDetector(system, budget).find_berge_cycle(k, through_edge)


def find_linear_cycle(
    system: TripleSystem, k: int, budget: int = DEFAULT_EXPANSION_BUDGET, through_edge: Optional[int] = None
) -> Optional[LinearCycleWitness]:
    """Find a linear cycle of length exactly k (see CycleDetector)."""
    return CycleDetector(system, budget).find_linear_cycle(k, through_edge)


def is_family_free(
    system: TripleSystem, family: FamilySpec, budget: int = DEFAULT_EXPANSION_BUDGET
) -> FamilyCheckReport:
    """Check a system against a forbidden family."""
    return CycleDetector(system, budget).is_family_free(family)


def verify_witness(system: TripleSystem, witness: CycleWitness) -> bool:
    """
    Check a witness against its host system.

    Args:
        system: The host triple system
        witness: A Berge or linear cycle witness

    Returns:
        True iff every invariant of the witness kind holds

    Raises:
        ValidationError: If an edge index is out of range
    """
    k = witness.k
    for h in witness.edge_indices:
        if not 0 <= h < system.m:
            raise ValidationError(f"edge index {h} is out of range for m={system.m}")
    if k < witness.kind.min_length:
        return False
    if len(set(witness.vertices)) != k or len(set(witness.edge_indices)) != k:
        return False

    sets = [system.edge_sets[h] for h in witness.edge_indices]
    vertices = witness.vertices
    for i in range(k):
        if vertices[i] not in sets[i] or vertices[(i + 1) % k] not in sets[i]:
            return False

    if witness.kind is CycleKind.LINEAR:
        for i in range(k):
            for j in range(i + 1, k):
                overlap = sets[i] & sets[j]
                gap = j - i
                if gap == 1:
                    # h_i and h_{i+1} meet in v_{i+1}
                    if overlap != {vertices[j]}:
                        return False
                elif gap == k - 1:
                    if overlap != {vertices[0]}:
                        return False
                elif overlap:
                    return False
    return True
