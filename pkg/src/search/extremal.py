"""
Exact linear Turán numbers at small orders.

Linear triple systems are generated in orderly fashion: triples are added
in strictly increasing lexicographic order, a triple is admissible only if
none of its pairs is already covered, and a branch is cut as soon as the
newest triple completes a forbidden cycle. Freeness is inherited by
subsystems, so the cut is sound.
"""

import logging
import os
from math import comb
from concurrent.futures import ProcessPoolExecutor
from concurrent.futures.process import BrokenProcessPool
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..detection.engine import DEFAULT_EXPANSION_BUDGET, CycleDetector
from ..models.cycles import FamilySpec
from ..models.errors import BudgetExceededError, HypergraphError, ValidationError
from ..models.hypergraph import Triple, TripleSystem

logger = logging.getLogger(__name__)

# Largest order accepted by exact_extremal
EXACT_SEARCH_MAX_N = 9


@dataclass(frozen=True)
class SearchResult:
    """
    Outcome of an exact search.

    Attributes:
        n: Number of vertices
        family: Forbidden family (Berge C2 is always implied)
        max_edges: Largest edge count of a family-free linear system
        witness: Lexicographically smallest system reaching max_edges
        nodes_explored: Search tree nodes visited
    """

    n: int
    family: FamilySpec
    max_edges: int
    witness: TripleSystem
    nodes_explored: int

    def headline(self) -> str:
        return f"n={self.n} family={self.family.format()} max={self.max_edges}"


def degree_cap(n: int) -> int:
    """Edges a linear system on n vertices can have at most: floor(n floor((n-1)/2) / 3)."""
    if n < 3:
        return 0
    return n * ((n - 1) // 2) // 3


class OrderlySearch:
    """
    Depth-first generation of family-free linear systems on n vertices.

    Attributes:
        n: Number of vertices
        family: Forbidden cycles checked through each new triple
        budget: Maximum search nodes, also the budget of each cycle check
        nodes: Search nodes visited so far
    """

    def __init__(self, n: int, family: FamilySpec = FamilySpec(), budget: int = DEFAULT_EXPANSION_BUDGET):
        if n < 0:
            raise ValidationError(f"n must be non-negative, got {n}")
        self.n = n
        self.family = family
        self.budget = budget
        self.nodes = 0
        self._best: Tuple[Triple, ...] = ()
        self._cap = degree_cap(n)
        self.candidates: List[Triple] = list(combinations(range(n), 3))
        pair_bit: Dict[Tuple[int, int], int] = {
            pair: 1 << index for index, pair in enumerate(combinations(range(n), 2))
        }
        self.masks = [
            pair_bit[(a, b)] | pair_bit[(a, c)] | pair_bit[(b, c)] for a, b, c in self.candidates
        ]

    def _visit(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError(self.budget, self.nodes, "exact search")

    def admits(self, edges: Sequence[Triple]) -> bool:
        """Check the family through the last triple, which sorts last."""
        if not self.family.entries:
            return True
        system = TripleSystem(self.n, tuple(edges))
        detector = CycleDetector(system, self.budget)
        newest = system.m - 1
        for entry in self.family:
            if detector.find_cycle(entry.kind, entry.length, through_edge=newest) is not None:
                return False
        return True

    def systems(self, first: Optional[int] = None) -> Iterator[TripleSystem]:
        """
        Yield every family-free linear system in orderly order.

        Args:
            first: If given, only systems whose smallest triple is
                candidate number ``first`` (the empty system is skipped)
        """
        if first is None:
            self._visit()
            yield TripleSystem(self.n)
            starts = range(len(self.candidates))
        else:
            starts = [first]
        for start in starts:
            edges = [self.candidates[start]]
            self._visit()
            if self.admits(edges):
                yield from self._grow(edges, start, self.masks[start])

    def _grow(self, edges: List[Triple], last: int, used: int) -> Iterator[TripleSystem]:
        yield TripleSystem(self.n, tuple(edges))
        for index in range(last + 1, len(self.candidates)):
            if self.masks[index] & used:
                continue
            self._visit()
            edges.append(self.candidates[index])
            if self.admits(edges):
                yield from self._grow(edges, index, used | self.masks[index])
            edges.pop()

    def best(self, first: Optional[int] = None) -> Tuple[int, Tuple[Triple, ...]]:
        """
        Largest family-free system, lexicographically smallest among ties.

        Returns:
            (edge count, edges)
        """
        self._best = ()
        if first is None:
            self._visit()
            starts = range(len(self.candidates))
        else:
            starts = [first]
        for start in starts:
            if len(self._best) >= self._cap:
                break
            edges = [self.candidates[start]]
            self._visit()
            if self.admits(edges):
                self._improve(edges, start, self.masks[start])
        return len(self._best), self._best

    def _improve(self, edges: List[Triple], last: int, used: int) -> None:
        if len(edges) > len(self._best):
            self._best = tuple(edges)
            logger.debug("n=%d: new best %d after %d nodes", self.n, len(edges), self.nodes)
        open_slots = [
            index for index in range(last + 1, len(self.candidates)) if not self.masks[index] & used
        ]
        free_pairs = self.n * (self.n - 1) // 2 - bin(used).count("1")
        bound = len(edges) + min(len(open_slots), free_pairs // 3, self._cap - len(edges))
        if bound <= len(self._best):
            return
        for index in open_slots:
            self._visit()
            edges.append(self.candidates[index])
            if self.admits(edges):
                self._improve(edges, index, used | self.masks[index])
            edges.pop()
            if len(self._best) >= self._cap:
                return


def enumerate_linear_systems(
    n: int, family: FamilySpec = FamilySpec(), budget: int = DEFAULT_EXPANSION_BUDGET
) -> Iterator[TripleSystem]:
    """Every family-free linear system on n labelled vertices, the empty one first."""
    return OrderlySearch(n, family, budget).systems()


def _best_in_branch(n: int, family: FamilySpec, first: int, budget: int) -> Tuple[int, Tuple[Triple, ...], int]:
    search = OrderlySearch(n, family, budget)
    size, edges = search.best(first)
    return size, edges, search.nodes


def exact_extremal(
    n: int,
    family: FamilySpec = FamilySpec(),
    budget: int = DEFAULT_EXPANSION_BUDGET,
    workers: int = 1,
    max_n: int = EXACT_SEARCH_MAX_N,
) -> SearchResult:
    """
    Maximum number of triples in a family-free linear system on n vertices.

    Args:
        n: Number of vertices
        family: Forbidden cycles in addition to Berge C2
        budget: Search-node budget (per worker)
        workers: Processes used; first-triple branches are split among them
        max_n: Largest accepted n

    Returns:
        SearchResult whose witness is the lexicographically smallest maximum

    Raises:
        ValidationError: If n is negative or above max_n
        BudgetExceededError: If the budget runs out, in any worker
        HypergraphError: If a worker process dies
    """
    if n > max_n:
        raise ValidationError(f"exact search is limited to n <= {max_n}, got {n}")
    if workers <= 1 or n < 3:
        search = OrderlySearch(n, family, budget)
        size, edges = search.best()
        nodes = search.nodes
    else:
        branches = range(comb(n, 3))
        size, edges, nodes = 0, (), 0
        with ProcessPoolExecutor(max_workers=min(workers, os.cpu_count() or 1)) as pool:
            futures = [pool.submit(_best_in_branch, n, family, first, budget) for first in branches]
            for future in futures:
                try:
                    branch_size, branch_edges, branch_nodes = future.result()
                except BudgetExceededError:
                    pool.shutdown(wait=False, cancel_futures=True)
                    raise
                except BrokenProcessPool as e:
                    raise HypergraphError(f"exact search worker failed: {e}") from e
                nodes += branch_nodes
                if branch_size > size:
                    size, edges = branch_size, branch_edges
    logger.info("n=%d family=%s: maximum %d triples (%d nodes)", n, family.format(), size, nodes)
    return SearchResult(n, family, size, TripleSystem(n, edges), nodes)
