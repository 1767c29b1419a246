"""
Garbage subsystems of an edge.

For an edge abc of a triple system H, the garbage edges are the edges
disjoint from {a, b, c} that interact too much with the first neighborhoods
of a, b and c. Removing them leaves H_abc, on which the 3-links with
terminal abc are in bijection with the pairs (x, h), x in abc, h in E^x_2.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Dict, FrozenSet, Set, Tuple, Union

from ..models.hypergraph import Triple, TripleSystem
from .counting import resolve_edge

# Property numbers of the garbage definition
TWO_IN_NEIGHBORHOOD = 1
COMMON_NEIGHBOR = 2
SPLIT_NEIGHBORS = 3


def garbage_reasons(system: TripleSystem, edge: Union[int, Triple]) -> Dict[int, FrozenSet[int]]:
    """
    Classify the garbage edges of an edge.

    An edge h disjoint from abc is garbage when
      1. h has at least two vertices in N1(x) for some x in abc, or
      2. h meets N1(a) & N1(b) & N1(c), or
      3. h has a vertex u in N1(x) & N1(y) and another vertex w in N1(z)
         for some labelling {x, y, z} = {a, b, c}.

    Args:
        system: The host system
        edge: Edge index or triple abc

    Returns:
        Garbage edge index -> the properties it satisfies

    Raises:
        ValidationError: If the edge is not in the system
    """
    index = resolve_edge(system, edge)
    corner = system.edges[index]
    first = {x: system.first_neighborhood(x) for x in corner}
    common = first[corner[0]] & first[corner[1]] & first[corner[2]]
    excluded = set(corner)

    reasons: Dict[int, FrozenSet[int]] = {}
    for h, members in enumerate(system.edge_sets):
        if members & excluded:
            continue
        found: Set[int] = set()
        if any(len(members & first[x]) >= 2 for x in corner):
            found.add(TWO_IN_NEIGHBORHOOD)
        if members & common:
            found.add(COMMON_NEIGHBOR)
        for x, y, z in permutations(corner):
            pair_common = first[x] & first[y]
            if any(u in pair_common and w in first[z]
                   for u, w in permutations(system.edges[h], 2)):
                found.add(SPLIT_NEIGHBORS)
                break
        if found:
            reasons[h] = frozenset(found)
    return reasons


def garbage_subhypergraph(system: TripleSystem, edge: Union[int, Triple]) -> FrozenSet[int]:
    """Edge indices of the garbage subsystem H'_abc."""
    return frozenset(garbage_reasons(system, edge))


def kept_edges(system: TripleSystem, edge: Union[int, Triple]) -> FrozenSet[int]:
    """Edge indices of H_abc, the complement of the garbage subsystem."""
    return frozenset(range(system.m)) - garbage_subhypergraph(system, edge)


@dataclass(frozen=True)
class EdgeDecomposition:
    """
    The pieces built around one edge abc.

    Attributes:
        system: The host system H
        edge: Index of abc
        garbage: Edge indices of H'_abc
    """

    system: TripleSystem
    edge: int
    garbage: FrozenSet[int]

    @classmethod
    def build(cls, system: TripleSystem, edge: Union[int, Triple]) -> "EdgeDecomposition":
        index = resolve_edge(system, edge)
        return cls(system, index, garbage_subhypergraph(system, index))

    @property
    def corner(self) -> Triple:
        return self.system.edges[self.edge]

    @cached_property
    def kept(self) -> FrozenSet[int]:
        """Edge indices of H_abc."""
        return frozenset(range(self.system.m)) - self.garbage

    @cached_property
    def kept_system(self) -> TripleSystem:
        """H_abc on the full vertex set; abc keeps index position order."""
        return self.system.restrict(self.kept)

    @cached_property
    def kept_edge_index(self) -> int:
        """Index of abc inside kept_system."""
        return self.kept_system.edge_index(self.corner)

    def first_level(self, x: int) -> FrozenSet[int]:
        """E^x_1: kept edges through x other than abc."""
        return frozenset(
            h for h in self.system.incidence[x] if h in self.kept and h != self.edge
        )

    def second_level(self, x: int) -> FrozenSet[int]:
        """
        E^x_2: kept edges disjoint from abc meeting an edge of E^x_1.

        Edges through another corner of abc are left out so that the count
        matches the 3-links of H_abc with terminal abc.
        """
        sets = self.system.edge_sets
        corner = sets[self.edge]
        touched: Set[int] = set()
        for h in self.first_level(x):
            for v in self.system.edges[h]:
                touched.update(self.system.incidence[v])
        return frozenset(h for h in touched if h in self.kept and not sets[h] & corner)

    def local_system(self, x: int) -> TripleSystem:
        """H_x, the system with edge set E^x_1 | E^x_2."""
        return self.system.restrict(self.first_level(x) | self.second_level(x))

    def local_second_neighborhood(self, x: int) -> FrozenSet[int]:
        """N2 of x computed inside H_x."""
        return self.local_system(x).second_neighborhood(x)

    @cached_property
    def second_neighborhoods(self) -> Dict[int, FrozenSet[int]]:
        """x -> N2^{H_x}(x) for the three corners."""
        return {x: self.local_second_neighborhood(x) for x in self.corner}

    def membership_counts(self) -> Dict[int, int]:
        """Vertex -> number of corners x whose N2^{H_x}(x) contains it."""
        counts: Dict[int, int] = {}
        for found in self.second_neighborhoods.values():
            for v in found:
                counts[v] = counts.get(v, 0) + 1
        return counts

    def sizes(self) -> Tuple[int, int, int]:
        """(|H'_abc|, |H_abc|, sum of |E^x_2|)."""
        return (
            len(self.garbage),
            len(self.kept),
            sum(len(self.second_level(x)) for x in self.corner),
        )
