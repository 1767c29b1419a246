"""
Test suite for cycle detection.

Tests Berge and linear cycle search, witness verification, family checks
and girth, with brute-force enumeration as an independent oracle.
"""

import math
from itertools import combinations

import networkx as nx
import pytest
from src.constructions import (
    construct_c5free,
    construct_from_bipartite,
    gen_complete_bipartite,
    gen_projective_incidence,
)
from src.data import get_sample_host
from src.detection import (
    CycleDetector,
    find_berge_cycle,
    find_linear_cycle,
    girth,
    is_family_free,
    verify_witness,
)
from src.models import (
    BipartiteGraph,
    BudgetExceededError,
    CycleKind,
    FamilySpec,
    TripleSystem,
    ValidationError,
    make_witness,
)
from src.search import brute_force_cycle, enumerate_linear_systems

TRIANGLE = TripleSystem.from_triples(6, [(0, 1, 2), (2, 3, 4), (0, 4, 5)])
LINEAR_C5 = TripleSystem.from_triples(10, [(0, 1, 5), (1, 2, 6), (2, 3, 7), (3, 4, 8), (4, 0, 9)])
# h1 and h3 of the cycle 0-1-2-3-4 share vertex 5
CROSSED_C5 = TripleSystem.from_triples(10, [(0, 1, 5), (1, 2, 6), (2, 3, 5), (3, 4, 8), (4, 0, 9)])

LENGTHS = [(CycleKind.BERGE, k) for k in range(2, 6)] + [(CycleKind.LINEAR, k) for k in range(3, 6)]


def all_small_systems(n, max_edges):
    """Every set of at most max_edges triples on n vertices, linear or not."""
    triples = list(combinations(range(n), 3))
    for size in range(max_edges + 1):
        for chosen in combinations(triples, size):
            yield TripleSystem(n, chosen)


class TestBergeCycles:
    """Test Berge cycle search."""

    def test_two_edges_sharing_a_pair(self):
        """Test that a shared pair is a Berge C2."""
        system = TripleSystem.from_triples(4, [(0, 1, 2), (0, 1, 3)])
        witness = find_berge_cycle(system, 2)

        assert witness.vertices == (0, 1)
        assert witness.edge_indices == (0, 1)

    def test_linear_triangle(self):
        """Test the canonical triangle of three triples."""
        witness = find_berge_cycle(TRIANGLE, 3)

        assert witness.vertices == (0, 2, 4)
        assert witness.edge_indices == (0, 2, 1)
        assert verify_witness(TRIANGLE, witness)

    @pytest.mark.parametrize("s", [2, 3, 4])
    def test_construction_has_no_c5(self, s):
        """Test that the lift of K_{s,s} has no Berge C5."""
        assert find_berge_cycle(construct_c5free(s), 5) is None

    def test_construction_has_c4(self):
        """Test that two layers over a shared host vertex give a Berge C4."""
        system = construct_c5free(2)
        witness = find_berge_cycle(system, 4)

        assert witness is not None
        assert witness.k == 4
        assert verify_witness(system, witness)

    def test_cycle_through_edge(self):
        """Test restricting the search to cycles through one edge."""
        system = construct_c5free(2)
        for edge in range(system.m):
            witness = find_berge_cycle(system, 4, through_edge=edge)
            assert edge in witness.edge_indices
            assert verify_witness(system, witness)

    def test_length_below_minimum(self):
        """Test that Berge cycles need length at least 2."""
        with pytest.raises(ValidationError):
            find_berge_cycle(TRIANGLE, 1)

    def test_edge_out_of_range(self):
        """Test that through_edge must be an edge index."""
        with pytest.raises(ValidationError):
            find_berge_cycle(TRIANGLE, 3, through_edge=3)

    def test_budget_exceeded(self):
        """Test that a tiny budget is reported instead of answering."""
        with pytest.raises(BudgetExceededError) as info:
            find_berge_cycle(construct_c5free(3), 5, budget=10)
        assert info.value.budget == 10


class TestLinearCycles:
    """Test linear cycle search."""

    def test_linear_triangle(self):
        """Test that the triangle is also a linear C3."""
        witness = find_linear_cycle(TRIANGLE, 3)

        assert witness.kind is CycleKind.LINEAR
        assert witness.vertices == (0, 2, 4)

    def test_crossed_pentagon(self):
        """Test a Berge C5 that is not a linear C5."""
        assert find_berge_cycle(CROSSED_C5, 5) is not None
        assert find_linear_cycle(CROSSED_C5, 5) is None

    def test_linear_pentagon(self):
        """Test a loose C5."""
        witness = find_linear_cycle(LINEAR_C5, 5)

        assert witness is not None
        assert verify_witness(LINEAR_C5, witness)

    def test_length_below_minimum(self):
        """Test that linear cycles need length at least 3."""
        with pytest.raises(ValidationError):
            find_linear_cycle(TRIANGLE, 2)

    @pytest.mark.parametrize("q", [1, 2, 3])
    def test_heawood_lift_has_no_short_odd_cycles(self, q):
        """Test the lift of the Heawood graph for linear C3, C5 and C7."""
        system = construct_from_bipartite(get_sample_host("heawood"), q)

        assert system.m == 21 * q
        assert system.is_linear()
        for k in (3, 5, 7):
            assert find_linear_cycle(system, k) is None

    def test_heawood_lift_against_brute_force(self):
        """Test the single-layer Heawood lift with the exhaustive oracle."""
        system = construct_from_bipartite(get_sample_host("heawood"), 1)
        for k in (3, 5):
            assert brute_force_cycle(system, CycleKind.LINEAR, k) is None


class TestCompleteness:
    """Test the detector against the brute-force enumerator."""

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_all_linear_systems(self, n):
        """Test presence and absence on every linear system on n vertices."""
        for system in enumerate_linear_systems(n):
            detector = CycleDetector(system)
            for kind, k in LENGTHS:
                found = detector.find_cycle(kind, k)
                expected = brute_force_cycle(system, kind, k)
                assert (found is None) == (expected is None), (system.edges, kind, k)
                if found is not None:
                    assert verify_witness(system, found)

    def test_nonlinear_systems(self):
        """Test small systems that may share pairs."""
        for system in all_small_systems(5, 3):
            detector = CycleDetector(system)
            for kind, k in LENGTHS:
                found = detector.find_cycle(kind, k)
                assert (found is None) == (brute_force_cycle(system, kind, k) is None)

    def test_berge_and_linear_triangles_agree(self):
        """Test that a linear system has a Berge C3 iff it has a linear C3."""
        for system in enumerate_linear_systems(6):
            assert (find_berge_cycle(system, 3) is None) == (find_linear_cycle(system, 3) is None)

    def test_adding_edges_keeps_cycles(self):
        """Test that a cycle of a subsystem is found in the whole system."""
        for system in enumerate_linear_systems(6):
            if system.m == 0:
                continue
            smaller = system.restrict(range(system.m - 1))
            for kind, k in LENGTHS:
                if CycleDetector(smaller).find_cycle(kind, k) is not None:
                    assert CycleDetector(system).find_cycle(kind, k) is not None


class TestWitnessVerification:
    """Test verify_witness."""

    def test_repeated_vertex(self):
        """Test that repeated vertices are invalid."""
        witness = make_witness(CycleKind.BERGE, [0, 2, 0], [0, 2, 1])

        assert not verify_witness(TRIANGLE, witness)

    def test_repeated_edge(self):
        """Test that repeated edges are invalid."""
        witness = make_witness(CycleKind.BERGE, [0, 1], [0, 0])

        assert not verify_witness(TRIANGLE, witness)

    def test_missing_membership(self):
        """Test that consecutive vertices must lie in the edge between them."""
        witness = make_witness(CycleKind.BERGE, [0, 4, 2], [0, 2, 1])

        assert not verify_witness(TRIANGLE, witness)

    def test_nonconsecutive_edges_must_be_disjoint(self):
        """Test a linear C5 witness whose h1 and h3 meet."""
        witness = make_witness(CycleKind.LINEAR, [0, 1, 2, 3, 4], [0, 2, 3, 4, 1])
        berge = make_witness(CycleKind.BERGE, [0, 1, 2, 3, 4], [0, 2, 3, 4, 1])

        assert not verify_witness(CROSSED_C5, witness)
        assert verify_witness(CROSSED_C5, berge)
        assert verify_witness(LINEAR_C5, witness)

    def test_edge_index_out_of_range(self):
        """Test that unknown edge indices are errors."""
        witness = make_witness(CycleKind.BERGE, [0, 2, 4], [0, 2, 7])

        with pytest.raises(ValidationError):
            verify_witness(TRIANGLE, witness)


class TestFamilyChecks:
    """Test is_family_free."""

    @pytest.mark.parametrize("s", [1, 2, 3, 4, 5, 6])
    def test_construction_is_c5_free(self, s):
        """Test the construction against Berge C2, C3 and C5."""
        system = construct_c5free(s)

        assert system.n == 3 * s * s
        assert system.m == s ** 3
        assert is_family_free(system, FamilySpec.parse("berge:2,3,5")).free

    def test_construction_is_not_c4_free(self):
        """Test that the first violation carries a witness."""
        system = construct_c5free(2)
        report = is_family_free(system, FamilySpec.parse("berge:4"))

        assert not report.free
        entry, witness = report.first_violation
        assert str(entry) == "berge:4"
        assert report.witness is witness
        assert verify_witness(system, witness)

    def test_shortest_violation_first(self):
        """Test that entries are tried in increasing length."""
        report = is_family_free(TRIANGLE, FamilySpec.parse("C5;linear:3"))

        assert str(report.first_violation[0]) == "berge:3"

    def test_empty_system_is_free(self):
        """Test that an edgeless system avoids everything."""
        assert is_family_free(TripleSystem(8), FamilySpec.parse("C5;Clin7;C4")).free

    def test_expansions_counted(self):
        """Test that the report records the search effort."""
        report = CycleDetector(construct_c5free(2)).is_family_free(FamilySpec.parse("C5"))

        assert report.free
        assert report.expansions > 0


class TestGirth:
    """Test graph girth."""

    def test_complete_bipartite(self):
        """Test girth(K_{s,s}) = 4 for s >= 2."""
        for s in (2, 3, 4):
            assert girth(gen_complete_bipartite(s, s)) == 4

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_projective_incidence(self, p):
        """Test that incidence graphs of projective planes have girth 6."""
        assert girth(gen_projective_incidence(p)) == 6

    def test_forests(self):
        """Test that acyclic graphs have infinite girth."""
        assert girth(BipartiteGraph.from_pairs(1, 1, [(0, 0)])) == math.inf
        assert girth(gen_complete_bipartite(1, 3)) == math.inf
        assert girth(nx.empty_graph(4)) == math.inf

    def test_named_graphs(self):
        """Test graphs with known girth."""
        assert girth(nx.complete_graph(4)) == 3
        assert girth(nx.cycle_graph(7)) == 7
        assert girth(nx.petersen_graph()) == 5
        assert girth(nx.heawood_graph()) == 6

    def test_shadow_girth(self):
        """Test that a triple's shadow is a triangle."""
        assert girth(TripleSystem.from_triples(3, [(0, 1, 2)]).shadow()) == 3
