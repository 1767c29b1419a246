"""
Girth of host graphs and 2-shadows.
"""

import math
from typing import Union

import networkx as nx

from ..models.graph import BipartiteGraph, ShadowGraph

Girth = Union[int, float]


def girth(graph: Union[BipartiteGraph, ShadowGraph, nx.Graph]) -> Girth:
    """
    Length of a shortest cycle.

    Args:
        graph: A bipartite host, a shadow graph or a plain networkx graph

    Returns:
        The girth, or math.inf for a forest
    """
    nx_graph = graph if isinstance(graph, nx.Graph) else graph.to_networkx()
    value = nx.girth(nx_graph)
    return math.inf if value == math.inf else int(value)
