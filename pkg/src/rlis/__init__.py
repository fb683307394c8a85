"""Rooted induced subtrees with many leaves: exact solvers for chordal
graphs and for graphs of bounded treewidth, plus the tooling around them."""

from .chordal import ChordalResult, chordal_profile, solve_chordal
from .errors import DecompositionError, DomainError, NotChordalError, ParseError, RLISError
from .graph import Graph, classify_tree, induced_subgraph, parse_graph
from .oracle import enumerate_induced_subtrees, leaf_function, leaf_profile, oracle_rlis
from .treedec import (NiceDecomposition, TreeDecomposition, chordal_clique_tree, check_nice,
                      format_td, heuristic_decomposition, is_chordal, make_nice, parse_td,
                      pinned_nice, validate_decomposition)
from .twdp import TwResult, solve_treewidth, solve_treewidth_auto, treewidth_profile
from .wpart import Partition, WeightedPartitionSet, reduce

__version__ = "0.1.0"

__all__ = [
    "ChordalResult", "DecompositionError", "DomainError", "Graph", "NiceDecomposition",
    "NotChordalError", "ParseError", "Partition", "RLISError", "TreeDecomposition", "TwResult",
    "WeightedPartitionSet", "check_nice", "chordal_clique_tree", "chordal_profile",
    "classify_tree", "enumerate_induced_subtrees", "format_td", "heuristic_decomposition",
    "induced_subgraph", "is_chordal", "leaf_function", "leaf_profile", "make_nice",
    "oracle_rlis", "parse_graph", "parse_td", "pinned_nice", "reduce", "solve_chordal",
    "solve_treewidth", "solve_treewidth_auto", "treewidth_profile", "validate_decomposition",
]
