"""Matching covered graphs and r-graphs: perfect matchings, the dependence
relation, solitary edges, 2-cut decomposition and the graph families
characterised by their solitary patterns."""

from .graph_core import MultiGraph, Cut, cut_of, canonical_form, is_isomorphic
from .matching_engine import enumerate_pms, is_matching_covered, solitary_edges
from .dependence import analyze, depends
from .cut_structure import decompose_2cuts, find_even_2cuts, glue, marked_components
from .rgraph_tools import certify_rgraph, r_edge_coloring
from .classifier import classify, verify

__all__ = [
    "MultiGraph", "Cut", "cut_of", "canonical_form", "is_isomorphic",
    "enumerate_pms", "is_matching_covered", "solitary_edges",
    "analyze", "depends",
    "decompose_2cuts", "find_even_2cuts", "glue", "marked_components",
    "certify_rgraph", "r_edge_coloring",
    "classify", "verify",
]

__version__ = "0.1.0"
