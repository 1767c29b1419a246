"""
Bound formulas and construction planning.

This module evaluates the lower bound obtained by lifting a host graph with
c * (z/2)^alpha edges on z vertices, chooses the host order and layer count
for a vertex budget, and evaluates the companion upper bounds for
Berge-C4-free and Berge-C5-free linear systems.
"""

import math
from dataclasses import dataclass, replace
from typing import Optional

from ..models.errors import ValidationError
from ..models.graph import BipartiteGraph

# Relative tolerance for comparing real-valued bounds
RELATIVE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class ConstructionPlan:
    """
    Parameters for a layered lift on a vertex budget.

    Attributes:
        n: Total vertex budget
        c: Host density constant
        alpha: Host density exponent, host has about c*(z/2)^alpha edges
        z: Host graph order
        q: Number of layers
        predicted_bound: lower_bound_value(n, c, alpha)
        k: Odd-cycle parameter the host girth serves, if known
    """

    n: int
    c: float
    alpha: float
    z: int
    q: int
    predicted_bound: float
    k: Optional[int] = None

    @property
    def host_edges(self) -> float:
        """Edge count of an ideal host on z vertices."""
        return self.c * (self.z / 2) ** self.alpha

    @property
    def predicted_edges(self) -> float:
        """Edges of the lift of an ideal host."""
        return self.host_edges * self.q

    def as_lines(self) -> str:
        """Plan as key=value lines."""
        fields = [
            ("n", self.n), ("c", self.c), ("alpha", self.alpha), ("z", self.z),
            ("q", self.q), ("host_edges", f"{self.host_edges:.6f}"),
            ("predicted_bound", f"{self.predicted_bound:.6f}"),
        ]
        if self.k is not None:
            fields.append(("k", self.k))
        return "\n".join(f"{key}={value}" for key, value in fields) + "\n"


def _check_density(c: float, alpha: float) -> None:
    if c <= 0:
        raise ValidationError(f"c must be positive, got {c}")
    if alpha <= 1:
        raise ValidationError(f"alpha must exceed 1, got {alpha}")


def lower_bound_value(n: float, c: float, alpha: float) -> float:
    """
    Edges guaranteed by lifting an optimal host on n vertices.

    Evaluates alpha*c/(4*alpha-2) * ((alpha-1)/(c*(2*alpha-1)))^(1-1/alpha)
    * n^(2-1/alpha).

    Raises:
        ValidationError: If n < 0, c <= 0 or alpha <= 1
    """
    _check_density(c, alpha)
    if n < 0:
        raise ValidationError(f"n must be non-negative, got {n}")
    coefficient = alpha * c / (4 * alpha - 2)
    ratio = (alpha - 1) / (c * (2 * alpha - 1))
    return coefficient * ratio ** (1 - 1 / alpha) * n ** (2 - 1 / alpha)


def corollary_bound(n: float, k: int) -> float:
    """
    Evaluate k/2 * (n/(k+1))^(1+1/k).

    This equals lower_bound_value(n, 1, 1 + 1/(k-1)), the value reached with
    hosts of girth 2k for k in {2, 3, 4, 6}.

    Raises:
        ValidationError: If k < 2 or n < 0
    """
    if k < 2:
        raise ValidationError(f"k must be at least 2, got {k}")
    if n < 0:
        raise ValidationError(f"n must be non-negative, got {n}")
    return k / 2 * (n / (k + 1)) ** (1 + 1 / k)


def corollary_alpha(k: int) -> float:
    """Host exponent 1 + 1/(k-1) of girth-2k hosts."""
    if k < 2:
        raise ValidationError(f"k must be at least 2, got {k}")
    return 1 + 1 / (k - 1)


def luw_exponent(k: int) -> float:
    """
    Exponent 1 + 2/(3k-4+eps) of the general lower bound for linear
    odd cycles up to length 2k+1, with eps = 0 for odd k and 1 for even k.
    """
    if k < 2:
        raise ValidationError(f"k must be at least 2, got {k}")
    epsilon = 0 if k % 2 else 1
    return 1 + 2 / (3 * k - 4 + epsilon)


def c5_degree_bound(n: float) -> float:
    """Average-degree ceiling sqrt(n/3 + 173889/4) + 417/2 for Berge-C5-free linear systems."""
    return math.sqrt(n / 3 + 173889 / 4) + 417 / 2


def c5_upper_bound(n: float) -> float:
    """Edge ceiling n/3 * c5_degree_bound(n) for Berge-C5-free linear systems."""
    return n / 3 * c5_degree_bound(n)


def c4_degree_bound(n: float) -> float:
    """Average-degree ceiling (sqrt(n+9) + 3)/2 for Berge-C4-free linear systems."""
    return (math.sqrt(n + 9) + 3) / 2


def c4_upper_bound(n: float) -> float:
    """Edge ceiling n*sqrt(n+9)/6 + n/2 for Berge-C4-free linear systems."""
    return n * math.sqrt(n + 9) / 6 + n / 2


def relative_error(value: float, expected: float) -> float:
    """|value - expected| relative to |expected| (absolute when expected is 0)."""
    if expected == 0:
        return abs(value)
    return abs(value - expected) / abs(expected)


def plan_parameters(n: int, c: float, alpha: float, k: Optional[int] = None) -> ConstructionPlan:
    """
    Choose the host order z and layer count q for a vertex budget.

    z is the nearest integer (at least 2) to
    (2^alpha (alpha-1) / (c (2 alpha - 1)))^(1/alpha) * n^(1/alpha), and
    q = floor((n - c (z/2)^alpha) / z). The choice is not claimed optimal
    at finite n.

    Args:
        n: Vertex budget
        c: Host density constant
        alpha: Host density exponent
        k: Optional odd-cycle parameter recorded in the plan

    Raises:
        ValidationError: On bad parameters or when no layer fits in n
    """
    _check_density(c, alpha)
    if n < 1:
        raise ValidationError(f"n must be at least 1, got {n}")
    scale = (2 ** alpha * (alpha - 1) / (c * (2 * alpha - 1))) ** (1 / alpha)
    z = max(2, int(round(scale * n ** (1 / alpha))))
    q = math.floor((n - c * (z / 2) ** alpha) / z)
    if q < 1:
        raise ValidationError(
            f"n={n} leaves no room for a layer beside a host on z={z} vertices; use a larger n"
        )
    return ConstructionPlan(n, c, alpha, z, q, lower_bound_value(n, c, alpha), k)


def fit_plan_to_host(plan: ConstructionPlan, host: BipartiteGraph) -> ConstructionPlan:
    """
    Re-derive z and q from a concrete host graph.

    q becomes floor((n - |E(G)|) / |V(G)|); the vertices the lift does not
    use are left isolated.

    Raises:
        ValidationError: If the host is empty or does not fit in the budget
    """
    if host.size == 0:
        raise ValidationError("host graph has no edges")
    q = (plan.n - host.size) // host.order
    if q < 1:
        raise ValidationError(
            f"host with {host.order} vertices and {host.size} edges does not fit in n={plan.n}"
        )
    return replace(plan, z=host.order, q=q)
