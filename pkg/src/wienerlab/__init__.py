"""wienerlab: Wiener-type graph invariants, graph families, isomorph-free
enumeration and an exhaustive verification harness."""

from .canon import CanonForm, canonical_form, is_isomorphic
from .distance import UNREACHABLE, DistMatrix, bfs_apsp
from .errors import BadParamsError, DisconnectedError, DomainError, TooLargeError, WienerLabError
from .graph import Digraph, Graph
from .invariants import (
    betweenness,
    eta,
    gutman,
    n2_n3,
    p_pairs,
    reach_counts,
    schultz,
    szeged,
    transmission,
    wiener,
    wiener_digraph,
)
from .io import from_graph6, to_graph6
from .linegraph import iterated_line_graph, line_graph

__version__ = "0.1.0"

__all__ = [
    "BadParamsError",
    "CanonForm",
    "Digraph",
    "DisconnectedError",
    "DistMatrix",
    "DomainError",
    "Graph",
    "TooLargeError",
    "UNREACHABLE",
    "WienerLabError",
    "betweenness",
    "bfs_apsp",
    "canonical_form",
    "eta",
    "from_graph6",
    "gutman",
    "is_isomorphic",
    "iterated_line_graph",
    "line_graph",
    "n2_n3",
    "p_pairs",
    "reach_counts",
    "schultz",
    "szeged",
    "to_graph6",
    "transmission",
    "wiener",
    "wiener_digraph",
]
