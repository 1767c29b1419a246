"""
Data loading utilities for the hypergraph toolkit.

This module reads and writes the plain-text formats used throughout the
toolkit: triple systems, bipartite host graphs and cycle witnesses. Readers
accept any order and comment lines starting with '#'; writers emit the
canonical order.
"""

import os
from typing import Iterable, List, Tuple

from ..models.cycles import CycleKind, CycleWitness, make_witness
from ..models.errors import FormatError, ValidationError
from ..models.graph import BipartiteGraph
from ..models.hypergraph import TripleSystem, canonical_triple


def _data_lines(text: str) -> List[Tuple[int, List[str]]]:
    """Split text into (line number, tokens), skipping comments and blanks."""
    lines = []
    for number, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append((number, stripped.split()))
    return lines


def _ints(tokens: List[str], expected: int, number: int, what: str) -> List[int]:
    if len(tokens) != expected:
        raise FormatError(f"expected {expected} integers for {what}, got {len(tokens)}", number)
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"non-integer token in {what}: {' '.join(tokens)}", number) from None


def load_triple_system(text: str) -> TripleSystem:
    """
    Parse a triple system from text.

    The first data line is ``n m``; it is followed by m lines ``a b c`` of
    distinct 0-indexed vertices in any order.

    Args:
        text: File contents

    Returns:
        The canonical TripleSystem

    Raises:
        FormatError: If the text is malformed or the edge count is wrong
        ValidationError: On out-of-range or repeated vertices or a duplicate
            triple
    """
    lines = _data_lines(text)
    if not lines:
        raise FormatError("missing header line 'n m'")
    number, tokens = lines[0]
    n, m = _ints(tokens, 2, number, "header")
    if n < 0 or m < 0:
        raise FormatError("header values must be non-negative", number)
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header announces {m} triples but {len(body)} follow", number)

    seen = {}
    for number, tokens in body:
        values = _ints(tokens, 3, number, "triple")
        for v in values:
            if not 0 <= v < n:
                raise ValidationError(f"line {number}: vertex {v} is outside [0, {n})")
        try:
            triple = canonical_triple(values)
        except ValidationError as e:
            raise ValidationError(f"line {number}: {e}") from None
        if triple in seen:
            raise ValidationError(
                f"line {number}: duplicate triple {triple} (first on line {seen[triple]})"
            )
        seen[triple] = number
    return TripleSystem(n, tuple(sorted(seen)))


def save_triple_system(system: TripleSystem, comments: Iterable[str] = ()) -> str:
    """
    Serialize a triple system in canonical order.

    Args:
        system: The system to write
        comments: Optional header comment lines (without the leading '#')

    Returns:
        File contents ending with a newline
    """
    out = [f"# {line}" for line in comments]
    out.append(f"{system.n} {system.m}")
    out.extend(f"{a} {b} {c}" for a, b, c in system.edges)
    return "\n".join(out) + "\n"


def load_bipartite_graph(text: str) -> BipartiteGraph:
    """
    Parse a bipartite graph: header ``n_left n_right m`` then m lines ``i j``.

    Raises:
        FormatError: If the text is malformed
        ValidationError: On out-of-range or duplicate edges
    """
    lines = _data_lines(text)
    if not lines:
        raise FormatError("missing header line 'n_left n_right m'")
    number, tokens = lines[0]
    n_left, n_right, m = _ints(tokens, 3, number, "header")
    if min(n_left, n_right, m) < 0:
        raise FormatError("header values must be non-negative", number)
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header announces {m} edges but {len(body)} follow", number)
    pairs = []
    for number, tokens in body:
        i, j = _ints(tokens, 2, number, "edge")
        if not (0 <= i < n_left and 0 <= j < n_right):
            raise ValidationError(f"line {number}: edge ({i}, {j}) is out of range")
        pairs.append((i, j))
    return BipartiteGraph.from_pairs(n_left, n_right, pairs)


def save_bipartite_graph(graph: BipartiteGraph, comments: Iterable[str] = ()) -> str:
    """Serialize a bipartite graph in canonical order."""
    out = [f"# {line}" for line in comments]
    out.append(f"{graph.n_left} {graph.n_right} {graph.size}")
    out.extend(f"{i} {j}" for i, j in graph.edges)
    return "\n".join(out) + "\n"


def format_witness(witness: CycleWitness) -> str:
    """
    Serialize a cycle witness.

    Format::

        cycle <kind> <k>
        v: v1 ... vk
        h: h1 ... hk
    """
    return (
        f"cycle {witness.kind.value} {witness.k}\n"
        f"v: {' '.join(str(v) for v in witness.vertices)}\n"
        f"h: {' '.join(str(h) for h in witness.edge_indices)}\n"
    )


def parse_witness(text: str) -> CycleWitness:
    """
    Parse a witness written by format_witness.

    Raises:
        FormatError: If the text is malformed
    """
    lines = _data_lines(text)
    if len(lines) != 3:
        raise FormatError(f"a witness has 3 lines, got {len(lines)}")
    (n0, head), (n1, v_line), (n2, h_line) = lines
    if len(head) != 3 or head[0] != "cycle":
        raise FormatError("expected 'cycle <kind> <k>'", n0)
    try:
        kind = CycleKind(head[1])
    except ValueError:
        raise FormatError(f"unknown cycle kind {head[1]!r}", n0) from None
    k = _ints(head[2:], 1, n0, "cycle length")[0]
    if not v_line or v_line[0] != "v:":
        raise FormatError("expected 'v: ...'", n1)
    if not h_line or h_line[0] != "h:":
        raise FormatError("expected 'h: ...'", n2)
    vertices = _ints(v_line[1:], k, n1, "vertex list")
    edges = _ints(h_line[1:], k, n2, "edge list")
    return make_witness(kind, vertices, edges)


def _read(filepath: str, what: str) -> str:
    if not os.path.exists(filepath):
        raise FileNotFoundError(f"{what} file not found: {filepath}")
    try:
        with open(filepath, "r", encoding="utf-8") as f:
            return f.read()
    except UnicodeDecodeError as e:
        raise FormatError(f"{what} file {filepath} is not valid UTF-8 (byte {e.start})") from None


def read_triple_system(filepath: str) -> TripleSystem:
    """Load a triple system from a file path."""
    return load_triple_system(_read(filepath, "Triple system"))


def read_bipartite_graph(filepath: str) -> BipartiteGraph:
    """Load a bipartite graph from a file path."""
    return load_bipartite_graph(_read(filepath, "Bipartite graph"))


def read_witness(filepath: str) -> CycleWitness:
    """Load a cycle witness from a file path."""
    return parse_witness(_read(filepath, "Witness"))


def write_text(filepath: str, text: str) -> None:
    """Write text to a file as UTF-8."""
    with open(filepath, "w", encoding="utf-8") as f:
        f.write(text)


def _hosts_dir() -> str:
    current_dir = os.path.dirname(os.path.abspath(__file__))
    project_root = os.path.dirname(os.path.dirname(current_dir))
    return os.path.join(project_root, "data", "hosts")


def list_sample_hosts() -> List[str]:
    """Names of the bundled host graphs."""
    hosts = _hosts_dir()
    if not os.path.isdir(hosts):
        return []
    return sorted(name[:-4] for name in os.listdir(hosts) if name.endswith(".txt"))


def get_sample_host(name: str = "heawood") -> BipartiteGraph:
    """
    Load a bundled host graph from data/hosts.

    Args:
        name: Host name, e.g. "heawood"

    Raises:
        ValidationError: If no such host is bundled
    """
    if name not in list_sample_hosts():
        raise ValidationError(f"host {name!r} is not bundled; available: {list_sample_hosts()}")
    return read_bipartite_graph(os.path.join(_hosts_dir(), f"{name}.txt"))
