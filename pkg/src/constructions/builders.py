"""
Layered lifts of bipartite host graphs.

Given a host G with classes L and R and a layer count q, the lift has q
copies L_1..L_q of L, q copies R_1..R_q of R and one vertex per host edge.
Each host edge ij and layer t contributes the triple {v_ij, l^t_i, r^t_j}.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Tuple

from ..models.errors import ValidationError
from ..models.graph import BipartiteGraph
from ..models.hypergraph import TripleSystem
from .bounds import ConstructionPlan, fit_plan_to_host
from .generators import gen_complete_bipartite

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BlockLayout:
    """
    Vertex numbering of a lift: L_1..L_q, then R_1..R_q, then B.

    Layers are 0-indexed in the methods; describe() prints 1-indexed labels.
    """

    host: BipartiteGraph
    q: int

    @property
    def n(self) -> int:
        """Vertices used by the lift."""
        return self.q * self.host.order + self.host.size

    @property
    def right_offset(self) -> int:
        return self.q * self.host.n_left

    @property
    def block_offset(self) -> int:
        return self.q * self.host.order

    @cached_property
    def edge_position(self) -> Dict[Tuple[int, int], int]:
        return {edge: index for index, edge in enumerate(self.host.edges)}

    def left(self, t: int, i: int) -> int:
        """Vertex l^t_i."""
        self._check_layer(t)
        if not 0 <= i < self.host.n_left:
            raise ValidationError(f"left index {i} is out of range")
        return t * self.host.n_left + i

    def right(self, t: int, j: int) -> int:
        """Vertex r^t_j."""
        self._check_layer(t)
        if not 0 <= j < self.host.n_right:
            raise ValidationError(f"right index {j} is out of range")
        return self.right_offset + t * self.host.n_right + j

    def block_vertex(self, i: int, j: int) -> int:
        """Vertex v_ij of host edge ij."""
        if (i, j) not in self.edge_position:
            raise ValidationError(f"({i}, {j}) is not a host edge")
        return self.block_offset + self.edge_position[(i, j)]

    def describe(self, v: int) -> str:
        """Label a vertex of the lift, e.g. 'l^2_1', 'r^1_3' or 'v_{1,2}'."""
        if not 0 <= v < self.n:
            raise ValidationError(f"vertex {v} is outside the layout")
        if v < self.right_offset:
            t, i = divmod(v, self.host.n_left)
            return f"l^{t + 1}_{i + 1}"
        if v < self.block_offset:
            t, j = divmod(v - self.right_offset, self.host.n_right)
            return f"r^{t + 1}_{j + 1}"
        i, j = self.host.edges[v - self.block_offset]
        return f"v_{{{i + 1},{j + 1}}}"

    def _check_layer(self, t: int) -> None:
        if not 0 <= t < self.q:
            raise ValidationError(f"layer {t} is outside 0..{self.q - 1}")


def construct_from_bipartite(host: BipartiteGraph, q: int) -> TripleSystem:
    """
    Lift a bipartite host graph into a linear triple system.

    Args:
        host: Host graph with at least one edge
        q: Number of layers

    Returns:
        A linear system with q*|V(G)| + |E(G)| vertices and q*|E(G)| edges.
        If the host has girth at least 2k the result has no linear cycle of
        odd length up to 2k+1.

    Raises:
        ValidationError: If q < 1 or the host has no edges
    """
    if q < 1:
        raise ValidationError(f"q must be at least 1, got {q}")
    if host.size == 0:
        raise ValidationError("host graph has no edges")
    layout = BlockLayout(host, q)
    triples = [
        (layout.block_offset + index, layout.left(t, i), layout.right(t, j))
        for t in range(q)
        for index, (i, j) in enumerate(host.edges)
    ]
    logger.debug("lifted %r with q=%d into %d triples", host, q, len(triples))
    return TripleSystem.from_triples(layout.n, triples)


def construct_c5free(s: int) -> TripleSystem:
    """
    Build the Berge-C5-free linear system on 3s^2 vertices with s^3 edges.

    This is the lift of K_{s,s} with s layers.

    Raises:
        ValidationError: If s < 1
    """
    if s < 1:
        raise ValidationError(f"s must be at least 1, got {s}")
    return construct_from_bipartite(gen_complete_bipartite(s, s), s)


def construct_planned(plan: ConstructionPlan, host: BipartiteGraph) -> TripleSystem:
    """
    Lift a concrete host with as many layers as the plan's budget allows.

    Unused vertices of the budget are kept as isolated vertices, so the
    result has exactly plan.n vertices.
    """
    fitted = fit_plan_to_host(plan, host)
    lifted = construct_from_bipartite(host, fitted.q)
    return TripleSystem(plan.n, lifted.edges)
