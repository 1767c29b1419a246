"""
Seeded random linear systems avoiding a forbidden family.
"""

import logging
from typing import Iterator, List, Optional, Set, Tuple

import numpy as np

from ..detection.engine import DEFAULT_EXPANSION_BUDGET, CycleDetector
from ..models.cycles import FamilySpec
from ..models.hypergraph import TripleSystem, canonical_triple

logger = logging.getLogger(__name__)

# Attempts allowed per requested edge
RANDOM_ATTEMPT_FACTOR = 50
# Generator recorded in output headers
RNG_ALGORITHM = "numpy.PCG64"


def random_linear_system(
    n: int,
    target_m: int,
    avoid: FamilySpec = FamilySpec(),
    seed: int = 0,
    attempts: Optional[int] = None,
    budget: int = DEFAULT_EXPANSION_BUDGET,
) -> TripleSystem:
    """
    Grow a linear system by sampling uniform random triples.

    A sampled triple is kept iff it covers no pair already covered and the
    enlarged system has no cycle of ``avoid`` through it. Sampling stops at
    target_m edges or when the attempts run out; the result may be short.

    Args:
        n: Number of vertices
        target_m: Desired number of edges
        avoid: Forbidden cycles
        seed: Seed of the numpy PCG64 generator; equal seeds give equal output
        attempts: Sampling attempts (default RANDOM_ATTEMPT_FACTOR * target_m)
        budget: Expansion budget of each cycle check
    """
    attempts = RANDOM_ATTEMPT_FACTOR * target_m if attempts is None else attempts
    system = TripleSystem(max(n, 0))
    if n < 3 or target_m <= 0:
        return system

    rng = np.random.default_rng(seed)
    covered: Set[Tuple[int, int]] = set()
    for _ in range(attempts):
        if system.m >= target_m:
            break
        triple = canonical_triple(rng.choice(n, size=3, replace=False).tolist())
        a, b, c = triple
        pairs = ((a, b), (a, c), (b, c))
        if any(pair in covered for pair in pairs):
            continue
        grown = system.add_edge(triple)
        if avoid.entries:
            detector = CycleDetector(grown, budget)
            newest = grown.edge_index(triple)
            if any(detector.find_cycle(e.kind, e.length, through_edge=newest) for e in avoid):
                continue
        system = grown
        covered.update(pairs)

    logger.debug("random system n=%d seed=%d: %d of %d edges", n, seed, system.m, target_m)
    return system


def random_corpus(
    count: int,
    n_range: Tuple[int, int],
    avoid: FamilySpec,
    seed: int = 0,
    density: float = 1.0,
) -> Iterator[Tuple[int, TripleSystem]]:
    """
    Yield (seed, system) pairs for a reproducible test corpus.

    System i uses seed ``seed + i``, a vertex count drawn from n_range
    (inclusive) and a target of density * n edges.
    """
    rng = np.random.default_rng(seed)
    low, high = n_range
    for offset in range(count):
        n = int(rng.integers(low, high + 1))
        system_seed = seed + offset
        yield system_seed, random_linear_system(n, int(density * n), avoid, system_seed)


def header_lines(seed: int, target_m: int, system: TripleSystem, avoid: FamilySpec) -> List[str]:
    """Comment lines recording how a random system was produced."""
    return [
        f"generator={RNG_ALGORITHM} seed={seed}",
        f"avoid={avoid.format()} target_m={target_m} achieved_m={system.m}",
    ]
