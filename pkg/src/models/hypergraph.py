"""
Triple system model for hypergraph analysis.

This module defines the TripleSystem class, a 3-uniform hypergraph on the
dense vertex set 0..n-1 stored as a canonical sorted tuple of triples, along
with its degree profile, neighborhoods, 2-shadow and degree peeling.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np

from .errors import ValidationError
from .graph import ShadowGraph

logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]
Pair = Tuple[int, int]

# Peeling removes vertices whose degree is below this share of the average
DEFAULT_PEEL_FRACTION = Fraction(1, 3)


@dataclass(frozen=True)
class DegreeProfile:
    """Vertex degrees of a triple system."""

    degrees: Tuple[int, ...]
    d_avg: Fraction
    d_max: int

    @property
    def degree_sum(self) -> int:
        """Sum of all vertex degrees (three times the edge count)."""
        return sum(self.degrees)


def canonical_triple(values: Sequence[int]) -> Triple:
    """
    Sort a vertex triple into increasing order.

    Args:
        values: Three vertex indices in any order

    Returns:
        The triple with a < b < c

    Raises:
        ValidationError: If there are not exactly three distinct vertices
    """
    if len(values) != 3:
        raise ValidationError(f"a triple needs exactly 3 vertices, got {len(values)}")
    a, b, c = sorted(int(x) for x in values)
    if a == b or b == c:
        raise ValidationError(f"repeated vertex in triple {tuple(values)}")
    return (a, b, c)


@dataclass(frozen=True)
class TripleSystem:
    """
    A 3-uniform hypergraph with vertices 0..n-1.

    Attributes:
        n: Number of vertices (isolated vertices are allowed)
        edges: Triples (a, b, c) with a < b < c, in strictly increasing
            lexicographic order
    """

    n: int
    edges: Tuple[Triple, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValidationError(f"vertex count must be non-negative, got {self.n}")
        previous: Optional[Triple] = None
        for edge in self.edges:
            if len(edge) != 3 or not (edge[0] < edge[1] < edge[2]):
                raise ValidationError(f"triple {edge} is not strictly increasing")
            if edge[0] < 0 or edge[2] >= self.n:
                raise ValidationError(f"triple {edge} has a vertex outside [0, {self.n})")
            if previous is not None and edge <= previous:
                raise ValidationError(f"edge list is not strictly increasing at {edge}")
            previous = edge

    @classmethod
    def from_triples(cls, n: int, triples: Iterable[Sequence[int]]) -> "TripleSystem":
        """
        Build a canonical system from triples given in any order.

        Args:
            n: Number of vertices
            triples: Vertex triples, each in any internal order

        Returns:
            The canonical TripleSystem

        Raises:
            ValidationError: On repeated vertices, out-of-range vertices or
                duplicate triples
        """
        canonical = sorted(canonical_triple(t) for t in triples)
        for first, second in zip(canonical, canonical[1:]):
            if first == second:
                raise ValidationError(f"duplicate triple {first}")
        return cls(n, tuple(canonical))

    @property
    def m(self) -> int:
        """Number of hyperedges."""
        return len(self.edges)

    @cached_property
    def incidence(self) -> Tuple[Tuple[int, ...], ...]:
        """For each vertex, the ascending indices of the edges containing it."""
        lists: List[List[int]] = [[] for _ in range(self.n)]
        for index, edge in enumerate(self.edges):
            for v in edge:
                lists[v].append(index)
        return tuple(tuple(items) for items in lists)

    @cached_property
    def edge_sets(self) -> Tuple[FrozenSet[int], ...]:
        """Edges as frozensets, aligned with ``edges``."""
        return tuple(frozenset(edge) for edge in self.edges)

    def edge_index(self, triple: Sequence[int]) -> int:
        """
        Get the index of a triple in the canonical edge list.

        Raises:
            ValidationError: If the triple is not an edge
        """
        key = canonical_triple(triple)
        lo, hi = 0, len(self.edges)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.edges[mid] < key:
                lo = mid + 1
            else:
                hi = mid
        if lo < len(self.edges) and self.edges[lo] == key:
            return lo
        raise ValidationError(f"{key} is not an edge of the system")

    def has_edge(self, triple: Sequence[int]) -> bool:
        """Check whether a triple is an edge."""
        try:
            self.edge_index(triple)
        except ValidationError:
            return False
        return True

    def degree(self, v: int) -> int:
        """Number of edges containing vertex v."""
        self._check_vertex(v)
        return len(self.incidence[v])

    def degree_list(self) -> List[int]:
        """Per-vertex degrees as a plain list."""
        if not self.edges:
            return [0] * self.n
        counts = np.bincount(np.asarray(self.edges, dtype=np.int64).ravel(), minlength=self.n)
        return [int(c) for c in counts]

    def degrees(self) -> DegreeProfile:
        """
        Compute the degree profile.

        Returns:
            DegreeProfile with exact average degree 3m/n

        Raises:
            ValidationError: If n == 0, where the average degree is undefined
        """
        if self.n == 0:
            raise ValidationError("average degree is undefined on an empty vertex set")
        degrees = self.degree_list()
        return DegreeProfile(
            degrees=tuple(degrees),
            d_avg=Fraction(3 * self.m, self.n),
            d_max=max(degrees),
        )

    def linearity_violation(self) -> Optional[Tuple[int, int]]:
        """
        Find the lexicographically first pair of edges sharing two vertices.

        Returns:
            (i, j) with i < j, or None when the system is linear
        """
        owners: Dict[Pair, List[int]] = {}
        for index, edge in enumerate(self.edges):
            for pair in combinations(edge, 2):
                owners.setdefault(pair, []).append(index)
        clashes = [(found[0], found[1]) for found in owners.values() if len(found) > 1]
        return min(clashes) if clashes else None

    def is_linear(self) -> bool:
        """True iff every two edges share at most one vertex."""
        return self.linearity_violation() is None

    def shadow(self) -> ShadowGraph:
        """
        Build the 2-shadow: every pair of vertices covered by an edge.

        The owner map is attached only when the system is linear, in which
        case every shadow edge lies in exactly one triple.
        """
        owners: Dict[Pair, List[int]] = {}
        for index, edge in enumerate(self.edges):
            for pair in combinations(edge, 2):
                owners.setdefault(pair, []).append(index)
        pairs = tuple(sorted(owners))
        linear = all(len(found) == 1 for found in owners.values())
        owner = {pair: found[0] for pair, found in owners.items()} if linear else None
        return ShadowGraph(self.n, pairs, owner)

    def first_neighborhood(self, v: int) -> FrozenSet[int]:
        """Vertices sharing an edge with v, excluding v."""
        self._check_vertex(v)
        found: Set[int] = set()
        for index in self.incidence[v]:
            found.update(self.edges[index])
        found.discard(v)
        return frozenset(found)

    def second_neighborhood(self, v: int) -> FrozenSet[int]:
        """Vertices outside N1(v) and v lying in an edge that meets N1(v)."""
        first = self.first_neighborhood(v)
        found: Set[int] = set()
        for x in first:
            for index in self.incidence[x]:
                found.update(self.edges[index])
        return frozenset(found - first - {v})

    def restrict(self, edge_indices: Iterable[int]) -> "TripleSystem":
        """Sub-system on the same vertex set keeping only the given edges."""
        keep = sorted(set(edge_indices))
        return TripleSystem(self.n, tuple(self.edges[i] for i in keep))

    def add_edge(self, triple: Sequence[int]) -> "TripleSystem":
        """
        Return a new system with one more edge.

        Indices of existing edges stay stable when the new triple sorts last.

        Raises:
            ValidationError: If the triple is already present or out of range
        """
        return TripleSystem.from_triples(self.n, list(self.edges) + [tuple(triple)])

    def peel_min_degree(
        self, fraction: Fraction = DEFAULT_PEEL_FRACTION, compact: bool = False
    ) -> "TripleSystem":
        """
        Repeatedly delete low-degree vertices and the edges through them.

        At each step the lowest-indexed remaining vertex whose degree is below
        ``fraction`` times the current average degree (taken over the vertices
        not yet deleted) is removed together with its edges. Deleted vertices
        stay in the result as isolated vertices unless ``compact`` is set.

        Args:
            fraction: Share of the average degree a vertex must reach
            compact: If True, drop isolated vertices and renumber

        Returns:
            The peeled system (possibly edgeless)
        """
        fraction = Fraction(fraction)
        degree = self.degree_list()
        alive = [True] * self.m
        active = [True] * self.n
        n_active = self.n
        m_alive = self.m

        while n_active > 0:
            threshold = fraction * Fraction(3 * m_alive, n_active)
            victim = next(
                (v for v in range(self.n) if active[v] and degree[v] < threshold), None
            )
            if victim is None:
                break
            active[victim] = False
            n_active -= 1
            for index in self.incidence[victim]:
                if alive[index]:
                    alive[index] = False
                    m_alive -= 1
                    for u in self.edges[index]:
                        degree[u] -= 1
            logger.debug("peeled vertex %d; %d edges on %d vertices remain",
                         victim, m_alive, n_active)

        peeled = TripleSystem(self.n, tuple(e for e, keep in zip(self.edges, alive) if keep))
        if compact:
            peeled, _ = peeled.compact()
        return peeled

    def compact(self) -> Tuple["TripleSystem", Dict[int, int]]:
        """
        Drop isolated vertices and renumber the rest in increasing order.

        Returns:
            The compacted system and the old-to-new vertex map
        """
        used = sorted({v for edge in self.edges for v in edge})
        mapping = {old: new for new, old in enumerate(used)}
        triples = [tuple(mapping[v] for v in edge) for edge in self.edges]
        return TripleSystem.from_triples(len(used), triples), mapping

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValidationError(f"vertex {v} is outside [0, {self.n})")

    def __repr__(self) -> str:
        return f"TripleSystem(n={self.n}, m={self.m})"
