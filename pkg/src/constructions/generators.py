"""
Host graph generators.

Complete bipartite graphs and incidence graphs of projective planes over
prime fields serve as the girth-4 and girth-6 hosts for the layered lift.
"""

from itertools import product
from typing import List, Tuple

from ..models.errors import ValidationError
from ..models.graph import BipartiteGraph

# Largest prime accepted for projective plane generation
MAX_PROJECTIVE_PRIME = 97
# Girth of the incidence graph of any projective plane
PROJECTIVE_GIRTH = 6


def is_prime(p: int) -> bool:
    """Trial-division primality test."""
    if p < 2:
        return False
    divisor = 2
    while divisor * divisor <= p:
        if p % divisor == 0:
            return False
        divisor += 1
    return True


def gen_complete_bipartite(a: int, b: int) -> BipartiteGraph:
    """
    Generate the complete bipartite graph K_{a,b}.

    Args:
        a: Size of the left class
        b: Size of the right class

    Returns:
        BipartiteGraph with a*b edges

    Raises:
        ValidationError: If either class is empty
    """
    if a < 1 or b < 1:
        raise ValidationError(f"K_{{a,b}} needs a, b >= 1, got {a}, {b}")
    return BipartiteGraph(a, b, tuple(product(range(a), range(b))))


def projective_points(p: int) -> List[Tuple[int, int, int]]:
    """
    Points of PG(2, p) as normalized homogeneous triples.

    A triple is normalized when its first nonzero coordinate is 1; the list
    is in lexicographic order.
    """
    points = []
    for coords in product(range(p), repeat=3):
        leading = next((x for x in coords if x), 0)
        if leading == 1:
            points.append(coords)
    return points


def _normalize(x: Tuple[int, ...], p: int) -> Tuple[int, int, int]:
    leading = next(c for c in x if c)
    inverse = pow(leading, -1, p)
    return tuple(c * inverse % p for c in x)


def _line_basis(line: Tuple[int, int, int], p: int) -> Tuple[Tuple[int, int, int], Tuple[int, int, int]]:
    """Two points spanning the line, i.e. a basis of the kernel of x -> x . line."""
    l0, l1, l2 = line
    if l0:
        return (-l1 % p, 1, 0), (-l2 % p, 0, 1)
    if l1:
        return (1, 0, 0), (0, -l2 % p, 1)
    return (1, 0, 0), (0, 1, 0)


def gen_projective_incidence(p: int, max_prime: int = MAX_PROJECTIVE_PRIME) -> BipartiteGraph:
    """
    Generate the point-line incidence graph of PG(2, p).

    Points are the left class and lines the right class, both indexed by
    normalized homogeneous triples in lexicographic order; point x lies on
    line l iff x . l = 0 (mod p); each line is enumerated from a basis of its
    p+1 points. The graph has p^2+p+1 vertices per class,
    (p+1)(p^2+p+1) edges and girth 6.

    Args:
        p: A prime
        max_prime: Largest prime accepted

    Raises:
        ValidationError: If p is not prime or exceeds max_prime
    """
    if not is_prime(p):
        raise ValidationError(f"projective planes are only generated for prime orders, got {p}")
    if p > max_prime:
        raise ValidationError(f"p={p} exceeds the configured maximum {max_prime}")
    points = projective_points(p)
    index = {point: number for number, point in enumerate(points)}
    edges = []
    for line_number, line in enumerate(points):
        u, w = _line_basis(line, p)
        on_line = [u] + [tuple((a + t * b) % p for a, b in zip(w, u)) for t in range(p)]
        edges.extend((index[_normalize(x, p)], line_number) for x in on_line)
    edges.sort()
    return BipartiteGraph(len(points), len(points), tuple(edges))
