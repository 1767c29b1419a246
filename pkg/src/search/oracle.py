"""
Brute-force oracles for cross-checking the search and the detector.

Nothing here prunes or orders cleverly: cycles are found by trying every
k-subset of edges in every cyclic order with every choice of shared
vertices, and extremal numbers by testing every set of triples.
"""

from itertools import combinations, permutations, product
from typing import Optional

from ..models.cycles import CycleKind, CycleWitness, FamilySpec, make_witness
from ..models.errors import ValidationError
from ..models.hypergraph import TripleSystem
from .extremal import SearchResult, degree_cap

# Largest order accepted by the naive extremal oracle
ORACLE_MAX_N = 6


def _is_linear_cycle(sets, vertices) -> bool:
    k = len(sets)
    for i in range(k):
        for j in range(i + 1, k):
            meet = sets[i] & sets[j]
            if j == i + 1:
                expected = {vertices[j]}
            elif i == 0 and j == k - 1:
                expected = {vertices[0]}
            else:
                expected = set()
            if meet != expected:
                return False
    return True


def brute_force_cycle(system: TripleSystem, kind: CycleKind, k: int) -> Optional[CycleWitness]:
    """
    Find a cycle by exhaustive enumeration.

    Raises:
        ValidationError: If k is below the kind's minimum length
    """
    kind = CycleKind(kind)
    if k < kind.min_length:
        raise ValidationError(f"{kind.value} cycles need length >= {kind.min_length}, got {k}")
    sets = system.edge_sets
    for subset in combinations(range(system.m), k):
        head, rest = subset[0], subset[1:]
        for order in permutations(rest):
            cycle = (head,) + order
            # v_i lies in h_{i-1} and h_i, v_1 in h_k and h_1
            choices = [sets[cycle[i - 1]] & sets[cycle[i]] for i in range(k)]
            for vertices in product(*choices):
                if len(set(vertices)) != k:
                    continue
                chosen = [sets[h] for h in cycle]
                if kind is CycleKind.LINEAR and not _is_linear_cycle(chosen, vertices):
                    continue
                return make_witness(kind, vertices, cycle)
    return None


def naive_extremal(n: int, family: FamilySpec = FamilySpec(), max_n: int = ORACLE_MAX_N) -> SearchResult:
    """
    Exact linear Turán number by testing every set of triples, largest first.

    Raises:
        ValidationError: If n is negative or above max_n
    """
    if not 0 <= n <= max_n:
        raise ValidationError(f"the naive oracle is limited to 0 <= n <= {max_n}, got {n}")
    triples = list(combinations(range(n), 3))
    tested = 0
    for size in range(degree_cap(n), -1, -1):
        for chosen in combinations(triples, size):
            tested += 1
            system = TripleSystem(n, chosen)
            if brute_force_cycle(system, CycleKind.BERGE, 2) is not None:
                continue
            if any(brute_force_cycle(system, e.kind, e.length) is not None for e in family):
                continue
            return SearchResult(n, family, size, system, tested)
    raise AssertionError("the empty system is always family-free")
