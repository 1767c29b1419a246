"""
Data loading and serialization utilities.

This module reads and writes triple systems, bipartite host graphs and
cycle witnesses, and gives access to the bundled sample hosts.
"""

from .data_loader import (
    format_witness,
    get_sample_host,
    list_sample_hosts,
    load_bipartite_graph,
    load_triple_system,
    parse_witness,
    read_bipartite_graph,
    read_triple_system,
    read_witness,
    save_bipartite_graph,
    save_triple_system,
    write_text,
)

__all__ = [
    "format_witness",
    "get_sample_host",
    "list_sample_hosts",
    "load_bipartite_graph",
    "load_triple_system",
    "parse_witness",
    "read_bipartite_graph",
    "read_triple_system",
    "read_witness",
    "save_bipartite_graph",
    "save_triple_system",
    "write_text",
]
