"""Cycles of consecutive odd lengths in non-bipartite 2-connected graphs."""

from .extractor import ExtractionConfig, ExtractionResult, extract_consecutive_odd, verify_result
from .graph import Graph, average_degree, emit_graph, induced_subgraph, parse_edge_list, read_graph
from .oracle import Spectrum, check_all_residues, enumerate_cycles, longest_consecutive_odd_run, residue_coverage

__all__ = [
    "ExtractionConfig",
    "ExtractionResult",
    "Graph",
    "Spectrum",
    "average_degree",
    "check_all_residues",
    "emit_graph",
    "enumerate_cycles",
    "extract_consecutive_odd",
    "induced_subgraph",
    "longest_consecutive_odd_run",
    "parse_edge_list",
    "read_graph",
    "residue_coverage",
    "verify_result",
]
