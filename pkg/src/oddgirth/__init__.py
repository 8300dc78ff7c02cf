"""Graphs of large odd girth and high minimum degree, and their maps into odd cycles."""

from .canon import canonical_form, is_isomorphic
from .errors import (
    GirthTooSmall,
    HypothesisViolated,
    InternalContradiction,
    OddGirthError,
    SearchBudgetExceeded,
)
from .forbidden import find_induced_phi, find_phi_prime, find_tetrahedron
from .generators import (
    gen_blowup,
    gen_complete,
    gen_cycle,
    gen_f_family,
    gen_grotzsch,
    gen_mobius_ladder,
)
from .graph import Graph, build_graph, parse_edge_list, to_edge_list
from .homcore import (
    chromatic_number_le,
    constructive_c_hom,
    find_hom,
    independent_set_from_hom,
    is_blowup_of,
    verify_hom,
)
from .parity import INF, creates_short_odd_cycle, odd_girth, parity_bfs, shortest_odd_cycle
from .saturation import SaturationOrder, in_class_G, is_edge_maximal, saturate

__version__ = "0.1.0"

__all__ = [
    "GirthTooSmall",
    "Graph",
    "HypothesisViolated",
    "INF",
    "InternalContradiction",
    "OddGirthError",
    "SaturationOrder",
    "SearchBudgetExceeded",
    "build_graph",
    "canonical_form",
    "chromatic_number_le",
    "constructive_c_hom",
    "creates_short_odd_cycle",
    "find_hom",
    "find_induced_phi",
    "find_phi_prime",
    "find_tetrahedron",
    "gen_blowup",
    "gen_complete",
    "gen_cycle",
    "gen_f_family",
    "gen_grotzsch",
    "gen_mobius_ladder",
    "in_class_G",
    "independent_set_from_hom",
    "is_blowup_of",
    "is_edge_maximal",
    "is_isomorphic",
    "odd_girth",
    "parity_bfs",
    "parse_edge_list",
    "saturate",
    "shortest_odd_cycle",
    "to_edge_list",
    "verify_hom",
]
