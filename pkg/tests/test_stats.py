"""
Test suite for the diagnostics: counts, garbage subsystems and claim audits.
"""

from itertools import combinations, permutations, product

import networkx as nx
import pytest
from src.constructions import construct_c5free
from src.models import FamilySpec, ShadowGraph, TripleSystem, ValidationError
from src.search import enumerate_linear_systems, random_corpus
from src.stats import (
    C4_CLAIMS,
    C5_CLAIMS,
    CONTEXTS,
    LINEAR_CLAIMS,
    ClaimId,
    ClaimReport,
    ClaimScope,
    ClaimStatus,
    EdgeDecomposition,
    check_claim,
    check_claims,
    claims_frame,
    corpus_summary,
    count_3links,
    count_3links_at,
    count_nonrainbow_paths3,
    count_paths3,
    count_rainbow_paths3,
    count_walks3,
    degree_table,
    garbage_reasons,
    garbage_subhypergraph,
    kept_edges,
    rainbow_paths,
    system_summary,
    three_links,
)

PATH = TripleSystem.from_triples(7, [(0, 1, 2), (2, 3, 4), (4, 5, 6)])
TRIANGLE = TripleSystem.from_triples(6, [(0, 1, 2), (2, 3, 4), (0, 4, 5)])
NONLINEAR = TripleSystem.from_triples(4, [(0, 1, 2), (0, 1, 3)])


def shadow_of(graph):
    """ShadowGraph with the same vertices and edges as a networkx graph."""
    pairs = sorted(tuple(sorted(edge)) for edge in graph.edges)
    return ShadowGraph(graph.number_of_nodes(), tuple(pairs))


def ordered_walks(graph, distinct):
    """Count sequences of four vertices joined by three edges."""
    count = 0
    for start in graph.nodes:
        for second in graph.adj[start]:
            for third in graph.adj[second]:
                for fourth in graph.adj[third]:
                    if not distinct or len({start, second, third, fourth}) == 4:
                        count += 1
    return count


def brute_force_links(system):
    """Count 3-links by trying every triple of edges and every middle."""
    sets = system.edge_sets
    count = 0
    for trio in combinations(range(system.m), 3):
        for middle in trio:
            h1, h3 = [h for h in trio if h != middle]
            if sets[h1] & sets[middle] and sets[h3] & sets[middle] and not sets[h1] & sets[h3]:
                count += 1
    return count


def garbage_predicate(system, edge):
    """Garbage edges decided directly from the three properties."""
    corner = system.edges[edge]
    first = {x: system.first_neighborhood(x) for x in corner}
    found = set()
    for h, members in enumerate(system.edges):
        if set(members) & set(corner):
            continue
        two_in_one = any(sum(u in first[x] for u in members) >= 2 for x in corner)
        common = any(all(u in first[x] for x in corner) for u in members)
        split = any(
            u != w and u in first[x] and u in first[y] and w in first[z]
            for x, y, z in permutations(corner)
            for u, w in product(members, members)
        )
        if two_in_one or common or split:
            found.add(h)
    return frozenset(found)


def small_linear_corpus():
    """Every linear system on 6 vertices plus random ones on 7 and 8."""
    yield from enumerate_linear_systems(6)
    for _, system in random_corpus(150, (7, 8), FamilySpec(), seed=11, density=1.5):
        yield system


class TestThreeLinks:
    """Test 3-link counting."""

    def test_lone_link(self):
        """Test a path of three triples."""
        assert count_3links(PATH) == 1
        assert count_3links_at(PATH, 0) == 1
        assert count_3links_at(PATH, 1) == 0
        assert count_3links_at(PATH, (6, 5, 4)) == 1
        assert list(three_links(PATH))[0].terminals == (0, 2)

    def test_no_third_edge(self):
        """Test that two edges make no 3-link."""
        assert count_3links(TripleSystem.from_triples(5, [(0, 1, 2), (2, 3, 4)])) == 0

    def test_triangle_has_no_links(self):
        """Test that pairwise meeting edges make no 3-link."""
        assert count_3links(TRIANGLE) == 0

    def test_against_brute_force(self):
        """Test the count against enumeration of edge triples."""
        for system in (construct_c5free(2), construct_c5free(3), TRIANGLE, NONLINEAR):
            assert count_3links(system) == brute_force_links(system)

    def test_terminal_identity(self):
        """Test p(H) = (1/2) sum_e p_e(H)."""
        systems = [construct_c5free(2), construct_c5free(3)] + [s for _, s in random_corpus(
            40, (8, 20), FamilySpec.parse("berge:5"), seed=3)]
        for system in systems:
            total = sum(count_3links_at(system, e) for e in range(system.m))
            assert 2 * count_3links(system) == total

    def test_unknown_edge(self):
        """Test that edges not in the system are errors."""
        with pytest.raises(ValidationError):
            count_3links_at(PATH, 3)
        with pytest.raises(ValidationError):
            count_3links_at(PATH, (0, 1, 3))


class TestWalksAndPaths:
    """Test walk and path counts in the shadow."""

    def test_single_edge(self):
        """Test that one graph edge carries one unordered walk of length 3."""
        assert count_walks3(ShadowGraph(2, ((0, 1),))) == 1

    def test_triangle(self):
        """Test K_3: 24 ordered walks, 12 unordered, no paths on four vertices."""
        shadow = TripleSystem.from_triples(3, [(0, 1, 2)]).shadow()

        assert count_walks3(shadow) == 12
        assert count_paths3(shadow) == 0

    def test_regular_graphs(self):
        """Test n d^3 / 2 walks in d-regular graphs."""
        assert count_walks3(shadow_of(nx.complete_graph(4))) == 4 * 27 // 2
        assert count_walks3(shadow_of(nx.petersen_graph())) == 10 * 27 // 2

    def test_path_of_triples(self):
        """Test walks and paths in the shadow of three chained triples."""
        assert count_walks3(PATH) == 72
        assert count_paths3(PATH) == 20

    def test_all_small_graphs(self):
        """Test both formulas against enumeration on the atlas graphs up to 7 vertices and 100 random 8-vertex graphs."""
        graphs = list(nx.graph_atlas_g())
        graphs += [nx.gnp_random_graph(8, 0.4, seed=seed) for seed in range(100)]
        for graph in graphs:
            shadow = shadow_of(graph)
            assert 2 * count_walks3(shadow) == ordered_walks(graph, distinct=False)
            assert 2 * count_paths3(shadow) == ordered_walks(graph, distinct=True)


class TestRainbowPaths:
    """Test rainbow 3-paths."""

    def test_single_triple(self):
        """Test that one triple has no 3-paths at all."""
        assert count_rainbow_paths3(TripleSystem.from_triples(3, [(0, 1, 2)])) == 0

    def test_lone_link(self):
        """Test that a 3-link gives exactly four rainbow paths."""
        assert sorted(rainbow_paths(PATH)) == [(0, 2, 4, 5), (0, 2, 4, 6), (1, 2, 4, 5), (1, 2, 4, 6)]
        assert count_nonrainbow_paths3(PATH) == 16

    def test_triangle_exceeds_links(self):
        """Test rainbow paths without any 3-link."""
        assert count_3links(TRIANGLE) == 0
        assert count_rainbow_paths3(TRIANGLE) > 0

    def test_nonlinear_rejected(self):
        """Test that rainbow paths need a linear system."""
        with pytest.raises(ValidationError):
            count_rainbow_paths3(NONLINEAR)

    def test_four_paths_per_link_are_distinct(self):
        """Test that 3-links map injectively to rainbow paths, four each."""
        for system in (construct_c5free(2), construct_c5free(3), PATH):
            sets = system.edge_sets
            rainbow = set(rainbow_paths(system))
            images = set()
            for link in three_links(system):
                (b,) = sets[link.h1] & sets[link.h2]
                (c,) = sets[link.h2] & sets[link.h3]
                for a in sets[link.h1] - {b}:
                    for d in sets[link.h3] - {c}:
                        images.add((a, b, c, d) if b < c else (d, c, b, a))
            assert len(images) == 4 * count_3links(system)
            assert images <= rainbow


class TestGarbage:
    """Test garbage subsystems and edge decompositions."""

    def test_single_edge(self):
        """Test that a lone edge has no garbage."""
        assert garbage_subhypergraph(TripleSystem.from_triples(3, [(0, 1, 2)]), 0) == frozenset()

    def test_example_without_garbage(self):
        """Test an edge meeting two neighborhoods once each."""
        system = TripleSystem.from_triples(8, [(0, 1, 2), (3, 4, 5), (0, 3, 6), (1, 4, 7)])

        assert garbage_subhypergraph(system, (0, 1, 2)) == frozenset()
        assert kept_edges(system, (0, 1, 2)) == frozenset(range(4))

    def test_two_in_one_neighborhood(self):
        """Test an edge with two vertices in N1(a)."""
        system = TripleSystem.from_triples(8, [(0, 1, 2), (0, 3, 4), (0, 5, 6), (3, 5, 7)])

        assert garbage_reasons(system, 0) == {3: frozenset({1})}

    def test_common_neighbor(self):
        """Test an edge through a common neighbor of a, b and c."""
        system = TripleSystem.from_triples(9, [(0, 1, 2), (0, 3, 4), (1, 3, 5), (2, 3, 6), (3, 7, 8)])

        assert garbage_reasons(system, 0) == {4: frozenset({2})}

    def test_split_neighbors(self):
        """Test an edge with a vertex in N1(a) & N1(b) and another in N1(c)."""
        system = TripleSystem.from_triples(9, [(0, 1, 2), (0, 3, 4), (1, 3, 5), (2, 6, 7), (3, 6, 8)])

        assert garbage_reasons(system, 0) == {4: frozenset({3})}

    def test_against_direct_predicate(self):
        """Test garbage membership against an independent predicate."""
        for system in small_linear_corpus():
            for edge in range(system.m):
                assert garbage_subhypergraph(system, edge) == garbage_predicate(system, edge)

    def test_decomposition(self):
        """Test the levels around an edge with one garbage edge."""
        system = TripleSystem.from_triples(8, [(0, 1, 2), (0, 3, 4), (0, 5, 6), (3, 5, 7)])
        piece = EdgeDecomposition.build(system, (0, 1, 2))

        assert piece.corner == (0, 1, 2)
        assert piece.kept == {0, 1, 2}
        assert piece.kept_system.edges == ((0, 1, 2), (0, 3, 4), (0, 5, 6))
        assert piece.first_level(0) == {1, 2}
        assert piece.second_level(0) == frozenset()
        assert piece.sizes() == (1, 3, 0)

    def test_second_level_counts_links(self):
        """Test sum_x |E^x_2| = p_abc(H_abc) on the path of triples."""
        piece = EdgeDecomposition.build(PATH, 0)

        assert piece.garbage == frozenset()
        assert piece.second_level(2) == {2}
        assert piece.sizes() == (0, 3, 1)
        assert count_3links_at(piece.kept_system, piece.kept_edge_index) == 1


class TestClaims:
    """Test claim reports."""

    def test_construction_passes(self):
        """Test the main per-vertex and per-edge bounds on the s=3 construction."""
        system = construct_c5free(3)
        for claim_id in ("N1_BOUND", "N2_BOUND", "GARBAGE_BOUND", "PLINK_BOUND"):
            report = check_claim(system, claim_id)
            assert report.status is ClaimStatus.PASS
            assert report.slack >= 0

    def test_c5_context_on_construction(self):
        """Test every claim of the C5 context on the s=2 construction."""
        reports = check_claims(construct_c5free(2), "c5")

        assert [r.claim_id for r in reports] == list(CONTEXTS["c5"])
        assert all(r.passed for r in reports)

    def test_c4_claims_not_applicable(self):
        """Test that a system with a Berge C4 gets N/A for the C4 claims."""
        report = check_claim(construct_c5free(2), ClaimId.C4_DEGSUM)

        assert report.status is ClaimStatus.NOT_APPLICABLE
        assert "Berge C4" in report.violation
        assert report.format_line() == "C4_DEGSUM N/A slack=- witness=-"

    def test_g2_structure_reports_component_slack(self):
        """Test that G_2 components with |E| < |V| give a positive slack."""
        report = check_claim(PATH, ClaimId.G2_STRUCTURE)

        assert report.status is ClaimStatus.PASS
        assert (report.lhs, report.rhs) == (1, 2)
        assert report.slack == 1
        assert report.witness == 0

    def test_nonlinear_not_applicable(self):
        """Test that every claim is N/A on a non-linear system."""
        for report in check_claims(NONLINEAR, "all"):
            assert report.status is ClaimStatus.NOT_APPLICABLE
            assert report.violation.startswith("not linear")

    def test_empty_system_vacuous(self):
        """Test that an edgeless system passes everything."""
        reports = check_claims(TripleSystem(5), "all")

        assert len(reports) == len(ClaimId)
        assert all(r.passed for r in reports)

    def test_global_report_line(self):
        """Test the line format of a global claim with zero slack."""
        report = check_claim(PATH, "RAINBOW_3LINK")

        assert (report.lhs, report.rhs) == (4, 4)
        assert report.format_line() == "RAINBOW_3LINK PASS slack=0 witness=global"

    def test_nonrainbow_equality_on_path(self):
        """Test that the non-rainbow bound is tight on the path of triples."""
        report = check_claim(PATH, ClaimId.NONRAINBOW_BOUND)

        assert (report.lhs, report.rhs) == (16, 16)

    def test_edge_witness_format(self):
        """Test that edge witnesses print as a,b,c."""
        report = check_claim(PATH, ClaimId.PLINK_BOUND)

        assert report.scope is ClaimScope.EDGE
        assert report.instances == 3
        assert report.witness == (0, 1, 2)
        assert report.format_witness() == "0,1,2"

    def test_failed_report(self):
        """Test a failing report's slack and line."""
        report = ClaimReport(ClaimId.N1_BOUND, ClaimScope.VERTEX, ClaimStatus.FAIL, lhs=9, rhs=6, witness=4)

        assert report.slack == -3
        assert not report.passed
        assert report.format_line() == "N1_BOUND FAIL slack=-3 witness=4"
        assert report.to_dict()["status"] == "FAIL"

    def test_unknown_context(self):
        """Test that only c5, c4 and all are contexts."""
        with pytest.raises(ValidationError):
            check_claims(PATH, "c6")

    def test_random_c5_free_corpus(self):
        """Test the C5 and linear claims on 500 random Berge-C5-free systems."""
        expected = set(C5_CLAIMS + LINEAR_CLAIMS)
        for seed, system in random_corpus(500, (6, 30), FamilySpec.parse("berge:5"), seed=2024):
            reports = check_claims(system, "c5")
            assert {r.claim_id for r in reports} == expected
            failed = [r.format_line() for r in reports if not r.passed]
            assert not failed, (seed, failed)

    def test_random_c4_free_corpus(self):
        """Test the C4 and linear claims on 500 random Berge-C4-free systems."""
        for seed, system in random_corpus(500, (6, 25), FamilySpec.parse("berge:4"), seed=4096):
            reports = check_claims(system, "c4")
            assert {r.claim_id for r in reports} >= set(C4_CLAIMS)
            failed = [r.format_line() for r in reports if not r.passed]
            assert not failed, (seed, failed)


class TestSummary:
    """Test the pandas summaries."""

    def test_degree_table(self):
        """Test the degree distribution of the path of triples."""
        table = degree_table(PATH)

        assert table["degree"].tolist() == [1, 2]
        assert table["vertices"].tolist() == [5, 2]
        assert degree_table(construct_c5free(2)).to_dict(orient="records") == [{"degree": 2, "vertices": 12}]

    def test_system_summary(self):
        """Test the headline statistics of the path of triples."""
        summary = system_summary(PATH)

        assert summary["n"] == 7
        assert summary["m"] == 3
        assert summary["linear"] is True
        assert summary["d_avg"] == "9/7"
        assert summary["three_links"] == 1
        assert summary["shadow_edges"] == 9
        assert summary["walks3"] == 72
        assert summary["paths3"] == 20
        assert summary["rainbow_paths3"] == 4
        assert summary["shadow_girth"] == 3

    def test_summary_of_nonlinear_system(self):
        """Test that rainbow counts are omitted for non-linear systems."""
        summary = system_summary(NONLINEAR)

        assert summary["linear"] is False
        assert summary["rainbow_paths3"] is None

    def test_claims_frame(self):
        """Test one row per report."""
        frame = claims_frame(check_claims(PATH, "c5"))

        assert len(frame) == len(CONTEXTS["c5"])
        assert set(frame["status"]) == {"PASS"}
        assert (frame["slack"] >= 0).all()

    def test_corpus_summary(self):
        """Test status counts across systems."""
        frames = [claims_frame(check_claims(s, "all")) for s in (construct_c5free(2), NONLINEAR)]
        result = corpus_summary(frames, label="mixed")
        row = result[result["claim_id"] == "N1_BOUND"].iloc[0]

        assert row["corpus"] == "mixed"
        assert (row["PASS"], row["FAIL"], row["N/A"]) == (1, 0, 1)
        assert row["min_slack"] >= 0
        c4_row = result[result["claim_id"] == "C4_DEGSUM"].iloc[0]
        assert c4_row["N/A"] == 2

    def test_empty_corpus(self):
        """Test that no frames give an empty summary."""
        assert corpus_summary([]).empty
