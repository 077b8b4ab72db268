"""Recognition of strictly chordality-k graphs and exact solvers on them and
on subclasses of 2K2-free graphs, with a brute-force oracle for checking."""

from .graph import Graph, parse_graph
from .oracle import oracle_solve
from .problems import ProblemKind, Solution
from .sck_solvers import (
    NotSCkError,
    solve_connected_dominating_set,
    solve_dominating_set,
    solve_ect,
    solve_fvs,
    solve_mis,
    solve_oct,
    solve_sck,
    solve_steiner,
    solve_vertex_cover,
)
from .separators import SubclassTag, classify_subclass, find_minimal_separator, is_2k2_free
from .twok2 import solve_2k2
from .vco import Rejection, Vco, compute_vco, validate_vco

__all__ = [
    "Graph",
    "parse_graph",
    "oracle_solve",
    "ProblemKind",
    "Solution",
    "NotSCkError",
    "solve_connected_dominating_set",
    "solve_dominating_set",
    "solve_ect",
    "solve_fvs",
    "solve_mis",
    "solve_oct",
    "solve_sck",
    "solve_steiner",
    "solve_vertex_cover",
    "SubclassTag",
    "classify_subclass",
    "find_minimal_separator",
    "is_2k2_free",
    "solve_2k2",
    "Rejection",
    "Vco",
    "compute_vco",
    "validate_vco",
]
