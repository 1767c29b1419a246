"""
Counting 3-links, walks and paths.

A 3-link is a triple of hyperedges h1, h2, h3 where h2 meets both h1 and h3
while h1 and h3 are disjoint. Walks and paths of length 3 are counted in the
2-shadow; a path is rainbow when its three shadow edges lie in three
different hyperedges.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, List, Set, Tuple, Union

import numpy as np

from ..models.errors import ValidationError
from ..models.graph import ShadowGraph
from ..models.hypergraph import TripleSystem

Path4 = Tuple[int, int, int, int]


@dataclass(frozen=True)
class ThreeLink:
    """
    A 3-link given by edge indices.

    Attributes:
        h1: Terminal edge with the smaller index
        h2: Middle edge, meeting both terminals
        h3: Terminal edge with the larger index, disjoint from h1
    """

    h1: int
    h2: int
    h3: int

    @property
    def terminals(self) -> Tuple[int, int]:
        return self.h1, self.h3


def _neighbors_of_edge(system: TripleSystem, index: int) -> List[int]:
    """Indices of the other edges meeting edge ``index``, ascending."""
    found: Set[int] = set()
    for v in system.edges[index]:
        found.update(system.incidence[v])
    found.discard(index)
    return sorted(found)


def three_links(system: TripleSystem) -> Iterator[ThreeLink]:
    """
    Iterate over all 3-links, ordered by middle edge then terminals.

    The middle edge of a 3-link is the only edge meeting both others, so
    every 3-link is produced exactly once.
    """
    sets = system.edge_sets
    for middle in range(system.m):
        for h1, h3 in combinations(_neighbors_of_edge(system, middle), 2):
            if not sets[h1] & sets[h3]:
                yield ThreeLink(h1, middle, h3)


def count_3links(system: TripleSystem) -> int:
    """Total number of 3-links p(H)."""
    return sum(1 for _ in three_links(system))


def count_3links_at(system: TripleSystem, edge: Union[int, Tuple[int, int, int]]) -> int:
    """
    Number of 3-links in which the given edge is terminal.

    Args:
        system: The host system
        edge: Edge index or the triple itself

    Raises:
        ValidationError: If the edge is not in the system
    """
    index = resolve_edge(system, edge)
    sets = system.edge_sets
    own = sets[index]
    count = 0
    for middle in _neighbors_of_edge(system, index):
        for far in _neighbors_of_edge(system, middle):
            if not sets[far] & own:
                count += 1
    return count


def resolve_edge(system: TripleSystem, edge: Union[int, Tuple[int, int, int]]) -> int:
    """Turn an edge index or triple into a validated edge index."""
    if isinstance(edge, (int, np.integer)):
        if not 0 <= edge < system.m:
            raise ValidationError(f"edge index {edge} is out of range for m={system.m}")
        return int(edge)
    return system.edge_index(edge)


def _as_shadow(graph: Union[ShadowGraph, TripleSystem]) -> ShadowGraph:
    return graph.shadow() if isinstance(graph, TripleSystem) else graph


def count_walks3(graph: Union[ShadowGraph, TripleSystem]) -> int:
    """
    Number of unordered walks of length 3, the sum of d(u) d(v) over edges uv.

    A triple system is replaced by its 2-shadow.
    """
    shadow = _as_shadow(graph)
    if not shadow.edges:
        return 0
    degree = np.asarray(shadow.degree_list(), dtype=np.int64)
    pairs = np.asarray(shadow.edges, dtype=np.int64)
    return int(np.sum(degree[pairs[:, 0]] * degree[pairs[:, 1]]))


def count_paths3(graph: Union[ShadowGraph, TripleSystem]) -> int:
    """Number of paths with three edges on four distinct vertices."""
    shadow = _as_shadow(graph)
    adjacency = [set(items) for items in shadow.adjacency()]
    total = 0
    for b, c in shadow.edges:
        # walks a-b-c-d with a != c and d != b, minus those closing a triangle
        total += (len(adjacency[b]) - 1) * (len(adjacency[c]) - 1)
        total -= len(adjacency[b] & adjacency[c])
    return total


def rainbow_paths(system: TripleSystem) -> Iterator[Path4]:
    """
    Iterate over the rainbow 3-paths of the shadow as (a, b, c, d), b < c.

    Raises:
        ValidationError: If the system is not linear
    """
    shadow = system.shadow()
    if shadow.owner is None:
        raise ValidationError("rainbow paths are only defined for linear systems")
    adjacency = shadow.adjacency()
    for b, c in shadow.edges:
        middle = shadow.owner[(b, c)]
        for a in adjacency[b]:
            if a == c:
                continue
            left = shadow.owner_of(a, b)
            if left == middle:
                continue
            for d in adjacency[c]:
                if d == b or d == a:
                    continue
                right = shadow.owner_of(c, d)
                if right != middle and right != left:
                    yield (a, b, c, d)


def count_rainbow_paths3(system: TripleSystem) -> int:
    """Number of rainbow 3-paths in the shadow of a linear system."""
    return sum(1 for _ in rainbow_paths(system))


def count_nonrainbow_paths3(system: TripleSystem) -> int:
    """Shadow 3-paths of a linear system that are not rainbow."""
    return count_paths3(system) - count_rainbow_paths3(system)
