"""
Command-line interface for the hypergraph toolkit.

Every subcommand reads and writes the plain-text formats of the data layer
and can mirror its report as one JSON object. Exit codes are stable:
0 success or free, 1 usage/IO/validation error, 2 a forbidden cycle or a
failed claim was found, 3 a search budget ran out.
"""

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, TextIO

from ..constructions import (
    PROJECTIVE_GIRTH,
    c4_upper_bound,
    c5_upper_bound,
    construct_c5free,
    construct_from_bipartite,
    corollary_bound,
    fit_plan_to_host,
    gen_complete_bipartite,
    gen_projective_incidence,
    lower_bound_value,
    luw_exponent,
    plan_parameters,
)
from ..data import (
    format_witness,
    get_sample_host,
    read_bipartite_graph,
    read_triple_system,
    read_witness,
    save_bipartite_graph,
    save_triple_system,
    write_text,
)
from ..detection import DEFAULT_EXPANSION_BUDGET, CycleDetector, girth, verify_witness
from ..models import BudgetExceededError, FamilySpec, HypergraphError, TripleSystem, ValidationError
from ..search import (
    ORACLE_MAX_N,
    exact_extremal,
    header_lines,
    naive_extremal,
    random_linear_system,
)
from ..stats import ClaimStatus, check_claims, claims_frame, degree_table, system_summary

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_WITNESS = 2
EXIT_BUDGET = 3


class CliUsageError(Exception):
    """Raised instead of exiting when the command line cannot be parsed."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        raise CliUsageError(f"{self.prog}: {message}")


@dataclass
class CliConfig:
    """
    Settings collected from the command line.

    Attributes:
        command: Subcommand name
        variant: Second-level choice for construct and gen
        input_path: System or host file to read
        witness_path: Witness file for verify
        output_path: Where to write the main output (stdout if None)
        host: Host file for lift and plan
        sample: Name of a bundled host
        family: Forbidden family text
        context: Claim context for verify-claims
        fmt: "text" or "json"
        check_girth: Compute the girth of generated hosts instead of reporting it
    """

    command: str
    variant: Optional[str] = None
    input_path: Optional[str] = None
    witness_path: Optional[str] = None
    output_path: Optional[str] = None
    host: Optional[str] = None
    sample: Optional[str] = None
    family: str = "none"
    context: str = "all"
    s: Optional[int] = None
    q: Optional[int] = None
    p: Optional[int] = None
    a: Optional[int] = None
    b: Optional[int] = None
    n: Optional[int] = None
    m: Optional[int] = None
    k: Optional[int] = None
    c: Optional[float] = None
    alpha: Optional[float] = None
    seed: int = 0
    budget: int = DEFAULT_EXPANSION_BUDGET
    threads: int = 1
    oracle: bool = False
    check_girth: bool = False
    fmt: str = "text"
    verbose: bool = False

    @classmethod
    def from_namespace(cls, namespace: argparse.Namespace) -> "CliConfig":
        values = {name: getattr(namespace, name) for name in cls.__dataclass_fields__ if hasattr(namespace, name)}
        config = cls(**values)
        config.validate()
        return config

    def validate(self) -> None:
        """
        Check numeric ranges and input paths before dispatch.

        Raises:
            ValidationError: On out-of-range parameters
            FileNotFoundError: On unreadable input paths
        """
        for name in ("s", "q", "a", "b"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise ValidationError(f"--{name} must be at least 1, got {value}")
        for name in ("n", "m"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise ValidationError(f"--{name} must be non-negative, got {value}")
        if self.budget < 1:
            raise ValidationError(f"--budget must be positive, got {self.budget}")
        if self.threads < 1:
            raise ValidationError(f"--threads must be positive, got {self.threads}")
        if self.oracle and self.n is not None and self.n > ORACLE_MAX_N:
            raise ValidationError(f"--oracle is limited to n <= {ORACLE_MAX_N}, got {self.n}")
        for path in (self.input_path, self.witness_path, self.host):
            if path is not None and not os.path.isfile(path):
                raise FileNotFoundError(f"input file not found: {path}")


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=["text", "json"], default="text",
                        help="output format")
    common.add_argument("-o", "--output", dest="output_path", help="write the main output to this file")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                        help="worker processes for exhaustive search")
    common.add_argument("--seed", type=int, default=0, help="seed for random generation")
    common.add_argument("--budget", type=int, default=DEFAULT_EXPANSION_BUDGET,
                        help="node-expansion budget for detection and search")
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with all subcommands."""
    common = _common_options()
    parser = _Parser(prog="hypergraph", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    construct = commands.add_parser("construct", help="build an extremal triple system")
    variants = construct.add_subparsers(dest="variant", required=True, parser_class=_Parser)
    c5free = variants.add_parser("c5free", parents=[common], help="lift of K_{s,s} with s layers")
    c5free.add_argument("--s", type=int, required=True)
    lift = variants.add_parser("lift", parents=[common], help="lift a bipartite host graph")
    source = lift.add_mutually_exclusive_group(required=True)
    source.add_argument("--host", help="bipartite graph file")
    source.add_argument("--sample", help="bundled host name, e.g. heawood")
    lift.add_argument("--q", type=int, required=True)

    gen = commands.add_parser("gen", help="generate a bipartite host graph")
    variants = gen.add_subparsers(dest="variant", required=True, parser_class=_Parser)
    kbip = variants.add_parser("kbipartite", parents=[common], help="complete bipartite K_{a,b}")
    kbip.add_argument("--a", type=int, required=True)
    kbip.add_argument("--b", type=int, required=True)
    pg = variants.add_parser("pg", parents=[common], help="incidence graph of PG(2, p)")
    pg.add_argument("--p", type=int, required=True)
    for variant in (kbip, pg):
        variant.add_argument("--girth", dest="check_girth", action="store_true",
                             help="compute the girth instead of reporting the known value")

    check = commands.add_parser("check", parents=[common], help="check a system against a family")
    check.add_argument("--family", required=True, help="e.g. berge:2,3,5 or C5 or linear:3")
    check.add_argument("input_path", metavar="FILE")

    stats = commands.add_parser("stats", parents=[common], help="degree profile and counts")
    stats.add_argument("input_path", metavar="FILE")

    claims = commands.add_parser("verify-claims", parents=[common], help="audit the inequalities")
    claims.add_argument("--context", choices=["c5", "c4", "all"], default="all")
    claims.add_argument("input_path", metavar="FILE")

    search = commands.add_parser("search", parents=[common], help="exact linear Turán number")
    search.add_argument("--n", type=int, required=True)
    search.add_argument("--family", default="none")
    search.add_argument("--oracle", action="store_true",
                        help=f"cross-check with the naive enumerator (n <= {ORACLE_MAX_N})")

    bounds = commands.add_parser("bounds", parents=[common], help="evaluate bound formulas")
    bounds.add_argument("--n", type=int, required=True)
    bounds.add_argument("--k", type=int)
    bounds.add_argument("--c", type=float)
    bounds.add_argument("--alpha", type=float)

    plan = commands.add_parser("plan", parents=[common], help="choose z and q for a budget")
    plan.add_argument("--n", type=int, required=True)
    plan.add_argument("--c", type=float, required=True)
    plan.add_argument("--alpha", type=float, required=True)
    plan.add_argument("--k", type=int)
    plan.add_argument("--host", help="fit the plan to this bipartite graph file")

    rand = commands.add_parser("random", parents=[common], help="seeded random linear system")
    rand.add_argument("--n", type=int, required=True)
    rand.add_argument("--m", type=int, required=True, help="target number of edges")
    rand.add_argument("--avoid", dest="family", default="none", help="forbidden family")

    verify = commands.add_parser("verify", parents=[common], help="re-check a saved witness")
    verify.add_argument("input_path", metavar="FILE")
    verify.add_argument("witness_path", metavar="WITNESS")
    return parser


def parse_args(argv: Optional[Sequence[str]] = None) -> CliConfig:
    """
    Parse a command line into a validated CliConfig.

    Raises:
        CliUsageError: On malformed command lines
    """
    namespace = build_parser().parse_args(argv)
    if namespace.command == "bounds" and (namespace.c is None) != (namespace.alpha is None):
        raise CliUsageError("bounds: --c and --alpha must be given together")
    return CliConfig.from_namespace(namespace)


def configure_logging(verbose: bool) -> None:
    """Send log records to stderr, at DEBUG when verbose."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


class CommandRunner:
    """Runs one parsed command and writes its output."""

    def __init__(self, config: CliConfig, stdout: TextIO):
        self.config = config
        self.stdout = stdout

    def emit(self, text: str, payload: Dict[str, object]) -> None:
        """Write the text or JSON rendering of a result."""
        if self.config.fmt == "json":
            text = json.dumps(payload, sort_keys=True, default=str) + "\n"
        if self.config.output_path:
            write_text(self.config.output_path, text)
        else:
            self.stdout.write(text)

    def _system_payload(self, system: TripleSystem, text: str) -> Dict[str, object]:
        return {"n": system.n, "m": system.m, "linear": system.is_linear(), "system": text}

    def construct(self) -> int:
        cfg = self.config
        if cfg.variant == "c5free":
            system = construct_c5free(cfg.s)
            comments = [f"construct c5free s={cfg.s}"]
        else:
            host = read_bipartite_graph(cfg.host) if cfg.host else get_sample_host(cfg.sample)
            host_girth = girth(host)
            system = construct_from_bipartite(host, cfg.q)
            comments = [f"construct lift q={cfg.q} host={host!r} girth={host_girth}"]
            if host_girth != float("inf"):
                comments.append(f"no linear cycle of odd length <= {2 * (int(host_girth) // 2) + 1}")
        text = save_triple_system(system, comments)
        self.emit(text, self._system_payload(system, text))
        return EXIT_OK

    def gen(self) -> int:
        cfg = self.config
        if cfg.variant == "kbipartite":
            host = gen_complete_bipartite(cfg.a, cfg.b)
            known = 4 if min(cfg.a, cfg.b) >= 2 else float("inf")
        else:
            host = gen_projective_incidence(cfg.p)
            known = PROJECTIVE_GIRTH
        host_girth = girth(host) if cfg.check_girth else known
        text = save_bipartite_graph(host, [f"gen {cfg.variant} girth={host_girth}"])
        self.emit(text, {"n_left": host.n_left, "n_right": host.n_right, "edges": host.size,
                         "girth": None if host_girth == float("inf") else host_girth, "graph": text})
        return EXIT_OK

    def check(self) -> int:
        cfg = self.config
        system = read_triple_system(cfg.input_path)
        family = FamilySpec.parse(cfg.family)
        report = CycleDetector(system, cfg.budget).is_family_free(family)
        if report.free:
            self.emit(f"free family={family.format()}\n",
                      {"free": True, "family": family.format(), "expansions": report.expansions})
            return EXIT_OK
        entry, witness = report.first_violation
        text = f"not free: found {entry}\n" + format_witness(witness)
        self.emit(text, {"free": False, "family": family.format(), "violation": str(entry),
                         "witness": format_witness(witness), "expansions": report.expansions})
        return EXIT_WITNESS

    def stats(self) -> int:
        system = read_triple_system(self.config.input_path)
        summary = system_summary(system)
        table = degree_table(system)
        lines = [f"{key}={value}" for key, value in summary.items()]
        text = "\n".join(lines) + "\n" + table.to_string(index=False) + "\n"
        payload = dict(summary, degree_distribution=table.to_dict(orient="records"))
        self.emit(text, payload)
        return EXIT_OK

    def verify_claims(self) -> int:
        cfg = self.config
        system = read_triple_system(cfg.input_path)
        reports = check_claims(system, cfg.context, cfg.budget)
        text = "".join(report.format_line() + "\n" for report in reports)
        frame = claims_frame(reports)
        self.emit(text, {"context": cfg.context, "claims": frame.to_dict(orient="records")})
        failed = any(report.status is ClaimStatus.FAIL for report in reports)
        return EXIT_WITNESS if failed else EXIT_OK

    def search(self) -> int:
        cfg = self.config
        family = FamilySpec.parse(cfg.family)
        result = exact_extremal(cfg.n, family, cfg.budget, workers=cfg.threads)
        lines = [result.headline()]
        payload: Dict[str, object] = {
            "n": result.n, "family": family.format(), "max": result.max_edges,
            "nodes": result.nodes_explored, "witness": save_triple_system(result.witness),
        }
        code = EXIT_OK
        if cfg.oracle:
            oracle = naive_extremal(cfg.n, family)
            agree = oracle.max_edges == result.max_edges
            lines.append(f"oracle max={oracle.max_edges} agree={'yes' if agree else 'no'}")
            payload["oracle_max"] = oracle.max_edges
            if not agree:
                code = EXIT_WITNESS
        text = "\n".join(lines) + "\n" + save_triple_system(result.witness)
        self.emit(text, payload)
        return code

    def bounds(self) -> int:
        cfg = self.config
        values: Dict[str, float] = {}
        if cfg.c is not None:
            values["lower_bound"] = lower_bound_value(cfg.n, cfg.c, cfg.alpha)
        if cfg.k is not None:
            values["corollary_bound"] = corollary_bound(cfg.n, cfg.k)
            values["exponent"] = luw_exponent(cfg.k)
        values["c4_upper_bound"] = c4_upper_bound(cfg.n)
        values["c5_upper_bound"] = c5_upper_bound(cfg.n)
        text = "".join(f"{key}={value:.6f}\n" for key, value in values.items())
        self.emit(text, dict(values, n=cfg.n))
        return EXIT_OK

    def plan(self) -> int:
        cfg = self.config
        plan = plan_parameters(cfg.n, cfg.c, cfg.alpha, cfg.k)
        if cfg.host:
            plan = fit_plan_to_host(plan, read_bipartite_graph(cfg.host))
        payload = {key: value for key, value in vars(plan).items()}
        payload["predicted_edges"] = plan.predicted_edges
        self.emit(plan.as_lines(), payload)
        return EXIT_OK

    def random(self) -> int:
        cfg = self.config
        family = FamilySpec.parse(cfg.family)
        system = random_linear_system(cfg.n, cfg.m, family, cfg.seed, budget=cfg.budget)
        text = save_triple_system(system, header_lines(cfg.seed, cfg.m, system, family))
        payload = self._system_payload(system, text)
        payload.update(seed=cfg.seed, target_m=cfg.m)
        self.emit(text, payload)
        return EXIT_OK

    def verify(self) -> int:
        cfg = self.config
        system = read_triple_system(cfg.input_path)
        witness = read_witness(cfg.witness_path)
        valid = verify_witness(system, witness)
        self.emit(f"{'valid' if valid else 'invalid'} {witness.kind.value} C{witness.k}\n",
                  {"valid": valid, "kind": witness.kind.value, "k": witness.k})
        return EXIT_OK if valid else EXIT_ERROR

    def dispatch(self) -> int:
        handlers: Dict[str, Callable[[], int]] = {
            "construct": self.construct,
            "gen": self.gen,
            "check": self.check,
            "stats": self.stats,
            "verify-claims": self.verify_claims,
            "search": self.search,
            "bounds": self.bounds,
            "plan": self.plan,
            "random": self.random,
            "verify": self.verify,
        }
        return handlers[self.config.command]()


def run(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    """
    Run the command line and return its exit code.

    Args:
        argv: Arguments without the program name (defaults to sys.argv[1:])
        stdout: Stream for results
        stderr: Stream for errors
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        config = parse_args(argv)
    except CliUsageError as e:
        print(f"usage error: {e}", file=stderr)
        return EXIT_ERROR
    except SystemExit as e:
        # --help
        return int(e.code or 0)
    except (HypergraphError, OSError) as e:
        print(f"error: {e}", file=stderr)
        return EXIT_ERROR

    configure_logging(config.verbose)
    try:
        return CommandRunner(config, stdout).dispatch()
    except BudgetExceededError as e:
        print(f"budget exceeded: {e}", file=stderr)
        return EXIT_BUDGET
    except (HypergraphError, OSError) as e:
        print(f"error: {e}", file=stderr)
        return EXIT_ERROR
