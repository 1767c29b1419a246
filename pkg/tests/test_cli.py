"""
Test suite for the command-line interface.
"""

import io
import json

import pytest
from src.constructions import construct_c5free
from src.data import read_bipartite_graph, read_triple_system, save_triple_system, write_text
from src.detection import is_family_free
from src.models import FamilySpec
from src.ui.cli import EXIT_BUDGET, EXIT_ERROR, EXIT_OK, EXIT_WITNESS, parse_args, run


def invoke(*argv):
    """Run the CLI and return (exit code, stdout, stderr)."""
    stdout, stderr = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


@pytest.fixture
def c5free_file(tmp_path):
    """The s=2 construction written to disk."""
    path = tmp_path / "c5free.txt"
    code, _, _ = invoke("construct", "c5free", "--s", "2", "-o", str(path))
    assert code == EXIT_OK
    return path


class TestConstructAndGen:
    """Test the construct and gen subcommands."""

    def test_construct_c5free(self, c5free_file):
        """Test that the written file loads as the construction."""
        text = c5free_file.read_text()

        assert text.startswith("# construct c5free s=2\n")
        assert read_triple_system(str(c5free_file)) == construct_c5free(2)

    def test_construct_lift_from_sample(self):
        """Test lifting the bundled Heawood graph."""
        code, out, _ = invoke("construct", "lift", "--sample", "heawood", "--q", "2")

        assert code == EXIT_OK
        assert "girth=6" in out
        assert "no linear cycle of odd length <= 7" in out
        assert "\n49 42\n" in out

    def test_unknown_sample(self):
        """Test that an unknown bundled host is an error."""
        code, _, err = invoke("construct", "lift", "--sample", "petersen", "--q", "1")

        assert code == EXIT_ERROR
        assert "petersen" in err

    def test_gen_pg(self, tmp_path):
        """Test the incidence graph of PG(2,3)."""
        path = tmp_path / "pg3.txt"
        code, _, _ = invoke("gen", "pg", "--p", "3", "-o", str(path))
        graph = read_bipartite_graph(str(path))

        assert code == EXIT_OK
        assert (graph.n_left, graph.n_right, graph.size) == (13, 13, 52)

    def test_gen_reports_known_girth(self):
        """Test the girth comment with and without computing it."""
        _, known, _ = invoke("gen", "pg", "--p", "3")
        _, computed, _ = invoke("gen", "pg", "--p", "3", "--girth")
        _, star, _ = invoke("gen", "kbipartite", "--a", "1", "--b", "3", "--girth")

        assert known.startswith("# gen pg girth=6\n")
        assert computed == known
        assert star.startswith("# gen kbipartite girth=inf\n")

    def test_gen_rejects_composite_order(self):
        """Test that p=6 fails validation."""
        code, _, err = invoke("gen", "pg", "--p", "6")

        assert code == EXIT_ERROR
        assert err.startswith("error:")

    def test_lift_from_host_file(self, tmp_path):
        """Test that a generated host can be lifted from disk."""
        host = tmp_path / "k22.txt"
        invoke("gen", "kbipartite", "--a", "2", "--b", "2", "-o", str(host))
        code, out, _ = invoke("construct", "lift", "--host", str(host), "--q", "2")

        assert code == EXIT_OK
        assert "\n12 8\n" in out


class TestCheckAndVerify:
    """Test check and verify."""

    def test_free(self, c5free_file):
        """Test that the construction passes berge:2,3,5."""
        code, out, _ = invoke("check", "--family", "berge:2,3,5", str(c5free_file))

        assert code == EXIT_OK
        assert out == "free family=berge:2,3,5\n"

    def test_violation_then_verify(self, c5free_file, tmp_path):
        """Test that a reported witness is saved and re-verified."""
        code, out, _ = invoke("check", "--family", "berge:4", str(c5free_file))

        assert code == EXIT_WITNESS
        first, _, witness_text = out.partition("\n")
        assert first == "not free: found berge:4"
        assert witness_text.startswith("cycle berge 4\nv: ")

        witness = tmp_path / "w.txt"
        write_text(str(witness), witness_text)
        code, out, _ = invoke("verify", str(c5free_file), str(witness))

        assert code == EXIT_OK
        assert out == "valid berge C4\n"

    def test_invalid_witness(self, c5free_file, tmp_path):
        """Test that a bogus witness is reported invalid."""
        witness = tmp_path / "w.txt"
        write_text(str(witness), "cycle berge 2\nv: 0 1\nh: 0 1\n")
        code, out, _ = invoke("verify", str(c5free_file), str(witness))

        assert code == EXIT_ERROR
        assert out == "invalid berge C2\n"

    def test_json(self, c5free_file):
        """Test that --format json prints one object."""
        code, out, _ = invoke("check", "--family", "berge:4", "--format", "json", str(c5free_file))
        payload = json.loads(out)

        assert code == EXIT_WITNESS
        assert payload["free"] is False
        assert payload["violation"] == "berge:4"

    def test_budget_exceeded(self, tmp_path):
        """Test exit code 3 when the detector runs out of budget."""
        path = tmp_path / "s3.txt"
        invoke("construct", "c5free", "--s", "3", "-o", str(path))
        code, _, err = invoke("check", "--family", "C5", "--budget", "1", str(path))

        assert code == EXIT_BUDGET
        assert err.startswith("budget exceeded:")

    def test_missing_file(self, tmp_path):
        """Test that a missing input is an I/O error."""
        code, _, err = invoke("check", "--family", "C5", str(tmp_path / "absent.txt"))

        assert code == EXIT_ERROR
        assert "absent.txt" in err

    def test_undecodable_file(self, tmp_path):
        """Test that input which is not UTF-8 exits 1 with a message."""
        path = tmp_path / "binary.txt"
        path.write_bytes(b"\xff\xfe 3 1\n")
        code, _, err = invoke("stats", str(path))

        assert code == EXIT_ERROR
        assert "UTF-8" in err

    def test_malformed_file(self, tmp_path):
        """Test that a malformed input reports its line."""
        path = tmp_path / "bad.txt"
        write_text(str(path), "3 1\n0 1\n")
        code, _, err = invoke("check", "--family", "C5", str(path))

        assert code == EXIT_ERROR
        assert "line 2" in err

    def test_bad_family(self, c5free_file):
        """Test that an unknown cycle kind is an error."""
        code, _, _ = invoke("check", "--family", "tight:3", str(c5free_file))

        assert code == EXIT_ERROR


class TestStatsAndClaims:
    """Test stats and verify-claims."""

    def test_stats(self, c5free_file):
        """Test the headline statistics."""
        code, out, _ = invoke("stats", str(c5free_file))

        assert code == EXIT_OK
        assert "n=12" in out.splitlines()
        assert "m=8" in out.splitlines()
        assert "linear=True" in out.splitlines()

    def test_stats_json(self, c5free_file):
        """Test the JSON degree distribution."""
        code, out, _ = invoke("stats", "--format", "json", str(c5free_file))
        payload = json.loads(out)

        assert code == EXIT_OK
        assert payload["m"] == 8
        assert sum(row["vertices"] for row in payload["degree_distribution"]) == 12

    def test_verify_claims_pass(self, c5free_file):
        """Test that the construction satisfies the C5 claims."""
        code, out, _ = invoke("verify-claims", "--context", "c5", str(c5free_file))

        assert code == EXIT_OK
        assert all(" FAIL " not in line for line in out.splitlines())
        assert out.count("\n") >= 5


class TestSearchBoundsPlan:
    """Test search, bounds and plan."""

    def test_search(self):
        """Test the exact value at n=4."""
        code, out, _ = invoke("search", "--n", "4", "--threads", "1")

        assert code == EXIT_OK
        assert out.splitlines()[0] == "n=4 family=none max=1"

    def test_search_with_oracle(self):
        """Test the cross-check line."""
        code, out, _ = invoke("search", "--n", "6", "--family", "berge:3", "--threads", "1", "--oracle")
        lines = out.splitlines()

        assert code == EXIT_OK
        assert lines[1].endswith("agree=yes")

    def test_oracle_limit(self):
        """Test that --oracle refuses orders the naive enumerator cannot reach before searching."""
        code, out, err = invoke("search", "--n", "9", "--threads", "1", "--oracle")

        assert code == EXIT_ERROR
        assert out == ""
        assert "--oracle" in err

    def test_search_budget_with_workers(self):
        """Test exit code 3 when a search worker runs out of budget."""
        code, _, err = invoke("search", "--n", "7", "--family", "berge:4", "--budget", "50", "--threads", "2")

        assert code == EXIT_BUDGET
        assert err.startswith("budget exceeded:")

    def test_bounds(self):
        """Test the lower bound at n=27."""
        code, out, _ = invoke("bounds", "--n", "27", "--c", "1", "--alpha", "2")
        lines = out.splitlines()

        assert code == EXIT_OK
        assert lines[0] == "lower_bound=27.000000"
        assert lines[1].startswith("c4_upper_bound=")
        assert lines[2].startswith("c5_upper_bound=")

    def test_bounds_corollary(self):
        """Test the corollary and exponent lines."""
        code, out, _ = invoke("bounds", "--n", "300", "--k", "2")

        assert code == EXIT_OK
        assert "corollary_bound=1000.000000" in out.splitlines()

    def test_bounds_usage_error(self):
        """Test that --c without --alpha is a usage error."""
        code, _, err = invoke("bounds", "--n", "27", "--c", "1")

        assert code == EXIT_ERROR
        assert err.startswith("usage error:")

    def test_plan(self):
        """Test the plan for n=27."""
        code, out, _ = invoke("plan", "--n", "27", "--c", "1", "--alpha", "2")

        assert code == EXIT_OK
        assert "z=6" in out.splitlines()
        assert "q=3" in out.splitlines()

    def test_unknown_command(self):
        """Test that an unknown subcommand is a usage error."""
        code, _, err = invoke("colour")

        assert code == EXIT_ERROR
        assert err.startswith("usage error:")


class TestRandom:
    """Test the random subcommand."""

    def test_random_header_and_freeness(self, tmp_path):
        """Test the provenance header and the avoided family."""
        path = tmp_path / "r.txt"
        code, _, _ = invoke("random", "--n", "20", "--m", "15", "--avoid", "C5", "--seed", "3", "-o", str(path))
        text = path.read_text()
        system = read_triple_system(str(path))

        assert code == EXIT_OK
        assert text.startswith("# generator=numpy.PCG64 seed=3\n# avoid=berge:3,5 target_m=15")
        assert system.is_linear()
        assert is_family_free(system, FamilySpec.parse("C5")).free

    def test_random_is_reproducible(self):
        """Test that equal seeds print equal systems."""
        first = invoke("random", "--n", "15", "--m", "10", "--seed", "11")
        second = invoke("random", "--n", "15", "--m", "10", "--seed", "11")

        assert first == second


class TestParseArgs:
    """Test argument validation."""

    def test_defaults(self):
        """Test the parsed configuration."""
        config = parse_args(["search", "--n", "5", "--threads", "2"])

        assert config.command == "search"
        assert config.n == 5
        assert config.family == "none"
        assert config.threads == 2
        assert config.fmt == "text"

    def test_negative_threads(self):
        """Test that a non-positive thread count is refused."""
        code, _, _ = invoke("search", "--n", "5", "--threads", "0")

        assert code == EXIT_ERROR

    def test_saved_text_matches_library(self, c5free_file):
        """Test that the CLI writes exactly what the library saves."""
        assert c5free_file.read_text() == save_triple_system(construct_c5free(2), ["construct c5free s=2"])
