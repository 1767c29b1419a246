"""
Graph models used alongside triple systems.

BipartiteGraph is the host graph lifted by the layered construction;
ShadowGraph is the 2-shadow of a triple system. Both convert to networkx
graphs for traversal.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .errors import ValidationError

Pair = Tuple[int, int]


@dataclass(frozen=True)
class BipartiteGraph:
    """
    A simple bipartite graph with classes L = 0..n_left-1 and R = 0..n_right-1.

    Attributes:
        n_left: Size of the left class
        n_right: Size of the right class
        edges: Sorted unique pairs (i, j) with i in L and j in R
    """

    n_left: int
    n_right: int
    edges: Tuple[Pair, ...] = ()

    def __post_init__(self):
        if self.n_left < 0 or self.n_right < 0:
            raise ValidationError("part sizes must be non-negative")
        previous: Optional[Pair] = None
        for i, j in self.edges:
            if not (0 <= i < self.n_left and 0 <= j < self.n_right):
                raise ValidationError(
                    f"edge ({i}, {j}) is outside {self.n_left} x {self.n_right}"
                )
            if previous is not None and (i, j) <= previous:
                raise ValidationError(f"edge list is not sorted and unique at ({i}, {j})")
            previous = (i, j)

    @classmethod
    def from_pairs(cls, n_left: int, n_right: int, pairs: Iterable[Sequence[int]]) -> "BipartiteGraph":
        """
        Build a graph from pairs in any order.

        Raises:
            ValidationError: On duplicate or out-of-range pairs
        """
        ordered = sorted((int(i), int(j)) for i, j in pairs)
        for first, second in zip(ordered, ordered[1:]):
            if first == second:
                raise ValidationError(f"duplicate edge {first}")
        return cls(n_left, n_right, tuple(ordered))

    @property
    def order(self) -> int:
        """Total number of vertices z = |L| + |R|."""
        return self.n_left + self.n_right

    @property
    def size(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def to_networkx(self) -> nx.Graph:
        """
        Convert to a networkx graph.

        Left vertex i becomes node i, right vertex j becomes node n_left + j;
        each node carries a ``bipartite`` attribute of 0 or 1.
        """
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n_left), bipartite=0)
        graph.add_nodes_from(range(self.n_left, self.order), bipartite=1)
        graph.add_edges_from((i, self.n_left + j) for i, j in self.edges)
        return graph

    def __repr__(self) -> str:
        return f"BipartiteGraph({self.n_left}+{self.n_right}, edges={self.size})"


@dataclass(frozen=True)
class ShadowGraph:
    """
    The 2-shadow of a triple system.

    Attributes:
        n: Vertex count
        edges: Sorted unique pairs (u, v) with u < v
        owner: Pair -> index of the hyperedge containing it; present only
            when the source system is linear
    """

    n: int
    edges: Tuple[Pair, ...] = ()
    owner: Optional[Dict[Pair, int]] = field(default=None, compare=False, hash=False)

    def __post_init__(self):
        if self.owner is not None and set(self.owner) != set(self.edges):
            raise ValidationError("owner map must be defined on exactly the shadow edges")

    @property
    def size(self) -> int:
        """Number of shadow edges."""
        return len(self.edges)

    def owner_of(self, u: int, v: int) -> int:
        """
        Get the hyperedge containing the pair uv.

        Raises:
            ValidationError: If no owner map exists or uv is not a shadow edge
        """
        if self.owner is None:
            raise ValidationError("owner map is only defined for linear systems")
        key = (u, v) if u < v else (v, u)
        if key not in self.owner:
            raise ValidationError(f"{key} is not a shadow edge")
        return self.owner[key]

    def adjacency(self) -> List[List[int]]:
        """Sorted neighbor lists indexed by vertex."""
        neighbors: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            neighbors[u].append(v)
            neighbors[v].append(u)
        for items in neighbors:
            items.sort()
        return neighbors

    def degree_list(self) -> List[int]:
        """Graph degree of every vertex."""
        return [len(items) for items in self.adjacency()]

    def to_networkx(self) -> nx.Graph:
        """Convert to a networkx graph on nodes 0..n-1."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph
