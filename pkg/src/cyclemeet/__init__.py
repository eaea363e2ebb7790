"""Toolkit for the combinatorics of longest-cycle intersections.

Exact longest-cycle search, disjoint-path/separator machinery, the auxiliary
bipartite graph of a cycle pair with its 4-cycle type census, winning-
certificate exchanges, vertex-transitive generators, and a verification
harness for the associated counting bounds on small graphs.
"""

from .auxgraph import AuxGraph, SegmentDecomposition, build_aux, decompose
from .cycles import (
    BudgetExceededError,
    CycleEmbedding,
    CycleSet,
    enumerate_longest_cycles,
    longest_cycle_length,
    min_pairwise_intersection,
)
from .exchange import WinningCertificate, improve_by_exchange
from .flow import PathFamily, SeparatorReport, max_disjoint_paths, min_vertex_cut, xy_separator
from .graphs import Graph, graph_from_graph6, graph_to_graph6
from .transitive import cayley, circulant, is_vertex_transitive

__all__ = [
    "AuxGraph",
    "BudgetExceededError",
    "CycleEmbedding",
    "CycleSet",
    "Graph",
    "PathFamily",
    "SegmentDecomposition",
    "SeparatorReport",
    "WinningCertificate",
    "build_aux",
    "cayley",
    "circulant",
    "decompose",
    "enumerate_longest_cycles",
    "graph_from_graph6",
    "graph_to_graph6",
    "improve_by_exchange",
    "is_vertex_transitive",
    "longest_cycle_length",
    "max_disjoint_paths",
    "min_pairwise_intersection",
    "min_vertex_cut",
    "xy_separator",
]
