"""
Auditable inequalities over concrete triple systems.

Each claim is a family of integer inequalities lhs <= rhs, one per vertex,
per edge or a single global one. A claim is only meaningful when its
hypothesis holds (linearity, and for most claims freeness of Berge C5 or
Berge C4); otherwise the report says NOT_APPLICABLE and names the violation.
Reports keep the instance of smallest slack, the first one in vertex or
edge order on ties.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from math import comb
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple, Union

import networkx as nx

from ..detection.engine import DEFAULT_EXPANSION_BUDGET, CycleDetector
from ..models.errors import ValidationError
from ..models.hypergraph import Triple, TripleSystem
from .counting import count_3links, count_3links_at, count_paths3, count_rainbow_paths3, count_walks3
from .garbage import EdgeDecomposition

logger = logging.getLogger(__name__)

Witness = Optional[Union[int, Triple]]
Instance = Tuple[Witness, int, int]


class ClaimId(Enum):
    """Identifiers of the auditable claims."""

    N1_BOUND = "N1_BOUND"
    N2_BOUND = "N2_BOUND"
    GARBAGE_BOUND = "GARBAGE_BOUND"
    PLINK_BOUND = "PLINK_BOUND"
    PABC_BIJECTION = "PABC_BIJECTION"
    ATMOST2 = "ATMOST2"
    BLAKLEY_ROY = "BLAKLEY_ROY"
    NONRAINBOW_BOUND = "NONRAINBOW_BOUND"
    RAINBOW_3LINK = "RAINBOW_3LINK"
    C4_DEGSUM = "C4_DEGSUM"
    C4_LOCAL3 = "C4_LOCAL3"
    C4_SX_OVERLAP = "C4_SX_OVERLAP"
    G2_STRUCTURE = "G2_STRUCTURE"
    HABC_DOMINATES = "HABC_DOMINATES"
    SECOND_LEVEL = "SECOND_LEVEL"
    COMMON_NEIGHBOR = "COMMON_NEIGHBOR"
    WALK_PATH_GAP = "WALK_PATH_GAP"
    C4_N2_COVER = "C4_N2_COVER"


class ClaimScope(Enum):
    VERTEX = "vertex"
    EDGE = "edge"
    GLOBAL = "global"


class ClaimStatus(Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    NOT_APPLICABLE = "N/A"


class Hypothesis(Enum):
    """What a claim assumes about the system."""

    LINEAR = "linear"
    C5_FREE = "linear and Berge-C5-free"
    C4_FREE = "linear and Berge-C4-free"

    @property
    def forbidden_length(self) -> Optional[int]:
        return {Hypothesis.C5_FREE: 5, Hypothesis.C4_FREE: 4}.get(self)


@dataclass(frozen=True)
class ClaimReport:
    """
    Result of auditing one claim.

    Attributes:
        claim_id: Which claim
        scope: Per vertex, per edge or global
        status: PASS, FAIL or NOT_APPLICABLE
        lhs: Left side at the worst instance
        rhs: Right side at the worst instance
        witness: Vertex, edge triple or None for global claims
        instances: Number of inequalities checked
        hypothesis: The claim's hypothesis
        violation: Why the hypothesis fails, for NOT_APPLICABLE reports
    """

    claim_id: ClaimId
    scope: ClaimScope
    status: ClaimStatus
    lhs: int = 0
    rhs: int = 0
    witness: Witness = None
    instances: int = 0
    hypothesis: Hypothesis = Hypothesis.LINEAR
    violation: Optional[str] = None

    @property
    def slack(self) -> int:
        return self.rhs - self.lhs

    @property
    def passed(self) -> bool:
        return self.status is ClaimStatus.PASS

    def format_witness(self) -> str:
        if self.status is ClaimStatus.NOT_APPLICABLE:
            return "-"
        if self.witness is None:
            return "global" if self.scope is ClaimScope.GLOBAL else "-"
        if isinstance(self.witness, tuple):
            return ",".join(str(v) for v in self.witness)
        return str(self.witness)

    def format_line(self) -> str:
        """``claim_id PASS|FAIL|N/A slack=<int> witness=<v|edge>``"""
        slack = "-" if self.status is ClaimStatus.NOT_APPLICABLE else str(self.slack)
        return f"{self.claim_id.value} {self.status.value} slack={slack} witness={self.format_witness()}"

    def to_dict(self) -> Dict[str, object]:
        return {
            "claim_id": self.claim_id.value,
            "scope": self.scope.value,
            "status": self.status.value,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "witness": self.format_witness(),
            "instances": self.instances,
            "hypothesis": self.hypothesis.value,
            "violation": self.violation,
        }


class ClaimAudit:
    """
    Shared state for auditing many claims on one system.

    Neighborhoods, edge decompositions, shadow counts and hypothesis checks
    are computed once and reused by every claim.
    """

    def __init__(self, system: TripleSystem, budget: int = DEFAULT_EXPANSION_BUDGET):
        self.system = system
        self.detector = CycleDetector(system, budget)
        self._hypotheses: Dict[Hypothesis, Optional[str]] = {}
        self._decompositions: Dict[int, EdgeDecomposition] = {}
        self._first: Dict[int, FrozenSet[int]] = {}
        self._second: Dict[int, FrozenSet[int]] = {}
        self._s_sets: Dict[int, Dict[int, FrozenSet[int]]] = {}

    def hypothesis_violation(self, hypothesis: Hypothesis) -> Optional[str]:
        """Describe why the hypothesis fails, or None when it holds."""
        if hypothesis not in self._hypotheses:
            self._hypotheses[hypothesis] = self._find_violation(hypothesis)
        return self._hypotheses[hypothesis]

    def _find_violation(self, hypothesis: Hypothesis) -> Optional[str]:
        clash = self.system.linearity_violation()
        if clash is not None:
            i, j = clash
            return f"not linear: edges {self.system.edges[i]} and {self.system.edges[j]} share two vertices"
        length = hypothesis.forbidden_length
        if length is None:
            return None
        witness = self.detector.find_berge_cycle(length)
        if witness is None:
            return None
        vertices = " ".join(str(v) for v in witness.vertices)
        edges = " ".join(str(h) for h in witness.edge_indices)
        return f"contains a Berge C{length}: v: {vertices} h: {edges}"

    @cached_property
    def degree(self) -> List[int]:
        return self.system.degree_list()

    @cached_property
    def d_max(self) -> int:
        return max(self.degree, default=0)

    def first(self, v: int) -> FrozenSet[int]:
        if v not in self._first:
            self._first[v] = self.system.first_neighborhood(v)
        return self._first[v]

    def second(self, v: int) -> FrozenSet[int]:
        if v not in self._second:
            self._second[v] = self.system.second_neighborhood(v)
        return self._second[v]

    def decomposition(self, edge: int) -> EdgeDecomposition:
        if edge not in self._decompositions:
            self._decompositions[edge] = EdgeDecomposition.build(self.system, edge)
        return self._decompositions[edge]

    def edges_near(self, vertices: Iterable[int]) -> List[int]:
        """Indices of edges meeting the given vertices, ascending."""
        found = set()
        for v in vertices:
            found.update(self.system.incidence[v])
        return sorted(found)

    def heavy_edges(self, v: int) -> List[int]:
        """Edges with at least two vertices in N1(v)."""
        first = self.first(v)
        sets = self.system.edge_sets
        return [h for h in self.edges_near(first) if len(sets[h] & first) >= 2]

    def s_sets(self, v: int) -> Dict[int, FrozenSet[int]]:
        """x -> S_x for x in N1(v): N2(v)-vertices of edges meeting N1(v) only in x."""
        if v not in self._s_sets:
            first, second = self.first(v), self.second(v)
            sets = self.system.edge_sets
            found: Dict[int, set] = {x: set() for x in first}
            for h in self.edges_near(first):
                inside = sets[h] & first
                if len(inside) == 1:
                    (x,) = inside
                    found[x].update(sets[h] & second)
            self._s_sets[v] = {x: frozenset(items) for x, items in found.items()}
        return self._s_sets[v]

    @cached_property
    def shadow(self):
        return self.system.shadow()

    @cached_property
    def walks3(self) -> int:
        return count_walks3(self.shadow)

    @cached_property
    def paths3(self) -> int:
        return count_paths3(self.shadow)

    @cached_property
    def rainbow3(self) -> int:
        return count_rainbow_paths3(self.system)

    @cached_property
    def links(self) -> int:
        return count_3links(self.system)

    def links_at(self, edge: int) -> int:
        return count_3links_at(self.system, edge)

    def kept_links_at(self, edge: int) -> int:
        """p_abc(H_abc)."""
        piece = self.decomposition(edge)
        return count_3links_at(piece.kept_system, piece.kept_edge_index)


# Instance generators, one per claim

def _n1_bound(audit: ClaimAudit) -> Iterator[Instance]:
    for v in range(audit.system.n):
        yield v, len(audit.heavy_edges(v)), 6 * audit.degree[v]


def _n2_bound(audit: ClaimAudit) -> Iterator[Instance]:
    for v in range(audit.system.n):
        total = sum(audit.degree[x] for x in audit.first(v))
        yield v, total - 18 * audit.degree[v], len(audit.second(v))


def _g2_structure(audit: ClaimAudit) -> Iterator[Instance]:
    sets = audit.system.edge_sets
    for v in range(audit.system.n):
        first, second = audit.first(v), audit.second(v)
        graph = nx.Graph()
        graph.add_nodes_from(second)
        for h in audit.edges_near(second):
            outer = sets[h] & second
            if len(outer) == 2 and len(sets[h] & first) == 1:
                graph.add_edge(*sorted(outer))
        triangles = sum(nx.triangles(graph).values()) // 3
        if triangles:
            yield v, triangles, 0
            continue
        for component in nx.connected_components(graph):
            yield v, graph.subgraph(component).number_of_edges(), len(component)


def _garbage_bound(audit: ClaimAudit) -> Iterator[Instance]:
    for e in range(audit.system.m):
        yield audit.system.edges[e], len(audit.decomposition(e).garbage), 25 * audit.d_max


def _plink_bound(audit: ClaimAudit) -> Iterator[Instance]:
    for e in range(audit.system.m):
        yield audit.system.edges[e], audit.links_at(e), 2 * audit.system.n + 273 * audit.d_max


def _pabc_bijection(audit: ClaimAudit) -> Iterator[Instance]:
    # equality, stored as max <= min so the slack is minus the gap
    for e in range(audit.system.m):
        piece = audit.decomposition(e)
        links = audit.kept_links_at(e)
        pairs = sum(len(piece.second_level(x)) for x in piece.corner)
        yield audit.system.edges[e], max(links, pairs), min(links, pairs)


def _atmost2(audit: ClaimAudit) -> Iterator[Instance]:
    for e in range(audit.system.m):
        counts = audit.decomposition(e).membership_counts()
        yield audit.system.edges[e], max(counts.values(), default=0), 2


def _habc_dominates(audit: ClaimAudit) -> Iterator[Instance]:
    for e in range(audit.system.m):
        yield audit.system.edges[e], audit.links_at(e), audit.kept_links_at(e) + 225 * audit.d_max


def _second_level(audit: ClaimAudit) -> Iterator[Instance]:
    for e in range(audit.system.m):
        piece = audit.decomposition(e)
        loss = 16 * sum(audit.degree[x] - 1 for x in piece.corner)
        reach = sum(len(found) for found in piece.second_neighborhoods.values())
        yield audit.system.edges[e], audit.kept_links_at(e) - loss, reach


def _common_neighbor(audit: ClaimAudit) -> Iterator[Instance]:
    for e in range(audit.system.m):
        a, b, c = audit.system.edges[e]
        yield audit.system.edges[e], len(audit.first(a) & audit.first(b) & audit.first(c)), 1


def _blakley_roy(audit: ClaimAudit) -> Iterator[Instance]:
    # walks3 >= n/2 * (2e/n)^3, multiplied out
    e = audit.shadow.size
    yield None, 4 * e ** 3, audit.walks3 * audit.system.n ** 2


def _nonrainbow_bound(audit: ClaimAudit) -> Iterator[Instance]:
    bound = sum(8 * comb(d, 2) for d in audit.degree)
    yield None, audit.paths3 - audit.rainbow3, bound


def _rainbow_3link(audit: ClaimAudit) -> Iterator[Instance]:
    yield None, 4 * audit.links, audit.rainbow3


def _walk_path_gap(audit: ClaimAudit) -> Iterator[Instance]:
    delta = max(audit.shadow.degree_list(), default=0)
    yield None, audit.walks3 - audit.paths3, 3 * audit.system.n * delta ** 2


def _c4_degsum(audit: ClaimAudit) -> Iterator[Instance]:
    n = audit.system.n
    for v in range(n):
        yield v, sum(2 * audit.degree[x] for x in audit.first(v)), n + 12 * audit.degree[v]


def _c4_local3(audit: ClaimAudit) -> Iterator[Instance]:
    sets = audit.system.edge_sets
    for v in range(audit.system.n):
        heavy = audit.heavy_edges(v)
        worst = max(
            (sum(1 for h in heavy if x in sets[h]) for x in audit.first(v)), default=0
        )
        yield v, worst, 3


def _c4_sx_overlap(audit: ClaimAudit) -> Iterator[Instance]:
    system = audit.system
    for v in range(system.n):
        s_sets = audit.s_sets(v)
        ordered = sorted(s_sets)
        for i, x in enumerate(ordered):
            for y in ordered[i + 1:]:
                limit = 2 if system.has_edge((x, y, v)) else 0
                yield v, len(s_sets[x] & s_sets[y]), limit


def _c4_n2_cover(audit: ClaimAudit) -> Iterator[Instance]:
    for v in range(audit.system.n):
        covered = sum(len(found) for found in audit.s_sets(v).values())
        yield v, covered - 2 * audit.degree[v], len(audit.second(v))


@dataclass(frozen=True)
class ClaimDefinition:
    scope: ClaimScope
    hypothesis: Hypothesis
    instances: Callable[[ClaimAudit], Iterator[Instance]] = field(compare=False)
    statement: str = ""


CLAIMS: Dict[ClaimId, ClaimDefinition] = {
    ClaimId.N1_BOUND: ClaimDefinition(
        ClaimScope.VERTEX, Hypothesis.C5_FREE, _n1_bound,
        "#{h : |h & N1(v)| >= 2} <= 6 d(v)"),
    ClaimId.N2_BOUND: ClaimDefinition(
        ClaimScope.VERTEX, Hypothesis.C5_FREE, _n2_bound,
        "sum_{x in N1(v)} d(x) - 18 d(v) <= |N2(v)|"),
    ClaimId.G2_STRUCTURE: ClaimDefinition(
        ClaimScope.VERTEX, Hypothesis.C5_FREE, _g2_structure,
        "G_2(v) is triangle-free and every component has |E| <= |V|"),
    ClaimId.GARBAGE_BOUND: ClaimDefinition(
        ClaimScope.EDGE, Hypothesis.C5_FREE, _garbage_bound,
        "|E(H'_abc)| <= 25 d_max"),
    ClaimId.PLINK_BOUND: ClaimDefinition(
        ClaimScope.EDGE, Hypothesis.C5_FREE, _plink_bound,
        "p_abc(H) <= 2n + 273 d_max"),
    ClaimId.PABC_BIJECTION: ClaimDefinition(
        ClaimScope.EDGE, Hypothesis.LINEAR, _pabc_bijection,
        "p_abc(H_abc) = sum_x |E^x_2|"),
    ClaimId.ATMOST2: ClaimDefinition(
        ClaimScope.EDGE, Hypothesis.C5_FREE, _atmost2,
        "every vertex lies in at most two of the N2^{H_x}(x)"),
    ClaimId.HABC_DOMINATES: ClaimDefinition(
        ClaimScope.EDGE, Hypothesis.C5_FREE, _habc_dominates,
        "p_abc(H) <= p_abc(H_abc) + 225 d_max"),
    ClaimId.SECOND_LEVEL: ClaimDefinition(
        ClaimScope.EDGE, Hypothesis.C5_FREE, _second_level,
        "p_abc(H_abc) - 16 sum_x (d(x) - 1) <= sum_x |N2^{H_x}(x)|"),
    ClaimId.COMMON_NEIGHBOR: ClaimDefinition(
        ClaimScope.EDGE, Hypothesis.C5_FREE, _common_neighbor,
        "|N1(a) & N1(b) & N1(c)| <= 1"),
    ClaimId.BLAKLEY_ROY: ClaimDefinition(
        ClaimScope.GLOBAL, Hypothesis.LINEAR, _blakley_roy,
        "4 e^3 <= walks3 * n^2"),
    ClaimId.NONRAINBOW_BOUND: ClaimDefinition(
        ClaimScope.GLOBAL, Hypothesis.LINEAR, _nonrainbow_bound,
        "non-rainbow 3-paths <= sum_v 8 C(d(v), 2)"),
    ClaimId.RAINBOW_3LINK: ClaimDefinition(
        ClaimScope.GLOBAL, Hypothesis.LINEAR, _rainbow_3link,
        "4 p(H) <= rainbow 3-paths"),
    ClaimId.WALK_PATH_GAP: ClaimDefinition(
        ClaimScope.GLOBAL, Hypothesis.LINEAR, _walk_path_gap,
        "walks3 - paths3 <= 3 n Delta^2"),
    ClaimId.C4_DEGSUM: ClaimDefinition(
        ClaimScope.VERTEX, Hypothesis.C4_FREE, _c4_degsum,
        "sum_{x in N1(v)} 2 d(x) <= n + 12 d(v)"),
    ClaimId.C4_LOCAL3: ClaimDefinition(
        ClaimScope.VERTEX, Hypothesis.C4_FREE, _c4_local3,
        "#{h containing x : |h & N1(v)| >= 2} <= 3"),
    ClaimId.C4_SX_OVERLAP: ClaimDefinition(
        ClaimScope.VERTEX, Hypothesis.C4_FREE, _c4_sx_overlap,
        "|S_x & S_y| <= 2 if xyv is an edge, else 0"),
    ClaimId.C4_N2_COVER: ClaimDefinition(
        ClaimScope.VERTEX, Hypothesis.C4_FREE, _c4_n2_cover,
        "sum_x |S_x| - 2 d(v) <= |N2(v)|"),
}

LINEAR_CLAIMS = tuple(c for c, d in CLAIMS.items() if d.hypothesis is Hypothesis.LINEAR)
C5_CLAIMS = tuple(c for c, d in CLAIMS.items() if d.hypothesis is Hypothesis.C5_FREE)
C4_CLAIMS = tuple(c for c, d in CLAIMS.items() if d.hypothesis is Hypothesis.C4_FREE)

CONTEXTS: Dict[str, Tuple[ClaimId, ...]] = {
    "c5": C5_CLAIMS + LINEAR_CLAIMS,
    "c4": C4_CLAIMS + LINEAR_CLAIMS,
    "all": tuple(CLAIMS),
}


def check_claim(
    system: TripleSystem,
    claim_id: Union[ClaimId, str],
    audit: Optional[ClaimAudit] = None,
    budget: int = DEFAULT_EXPANSION_BUDGET,
) -> ClaimReport:
    """
    Audit one claim on a system.

    Args:
        system: The triple system
        claim_id: Claim identifier or its name
        audit: Shared audit state when checking several claims
        budget: Expansion budget for the hypothesis cycle search

    Returns:
        ClaimReport with the worst instance

    Raises:
        BudgetExceededError: If the hypothesis check runs out of budget
    """
    claim_id = ClaimId(claim_id)
    definition = CLAIMS[claim_id]
    audit = audit or ClaimAudit(system, budget)

    violation = audit.hypothesis_violation(definition.hypothesis)
    if violation is not None:
        logger.info("%s not applicable: %s", claim_id.value, violation)
        return ClaimReport(
            claim_id, definition.scope, ClaimStatus.NOT_APPLICABLE,
            hypothesis=definition.hypothesis, violation=violation,
        )

    worst: Optional[Instance] = None
    count = 0
    for instance in definition.instances(audit):
        count += 1
        if worst is None or instance[2] - instance[1] < worst[2] - worst[1]:
            worst = instance
    if worst is None:
        return ClaimReport(claim_id, definition.scope, ClaimStatus.PASS, hypothesis=definition.hypothesis)

    witness, lhs, rhs = worst
    status = ClaimStatus.PASS if rhs >= lhs else ClaimStatus.FAIL
    if status is ClaimStatus.FAIL:
        logger.warning("%s fails at %s: %d > %d", claim_id.value, witness, lhs, rhs)
    return ClaimReport(
        claim_id, definition.scope, status, lhs, rhs, witness, count, definition.hypothesis
    )


def check_claims(
    system: TripleSystem, context: str = "all", budget: int = DEFAULT_EXPANSION_BUDGET
) -> List[ClaimReport]:
    """
    Audit every claim of a context: "c5", "c4" or "all".

    Raises:
        ValidationError: On an unknown context
    """
    if context not in CONTEXTS:
        raise ValidationError(f"unknown claim context {context!r}; expected one of {sorted(CONTEXTS)}")
    audit = ClaimAudit(system, budget)
    return [check_claim(system, claim_id, audit) for claim_id in CONTEXTS[context]]
