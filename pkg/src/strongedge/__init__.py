"""Strong edge colouring of sparse graphs through special walks in odd graphs."""
from .coloring import (
    ColoringError,
    ExactResult,
    StrongColoring,
    exact_strong_chromatic_index,
    format_coloring,
    greedy_strong_coloring,
    is_strong_coloring,
    parse_coloring,
    strong_chromatic_index_bruteforce,
    strong_coloring_with,
    verify_strong_coloring,
)
from .density import Density, mad, mad_bruteforce
from .girth import GirthProfile, even_girth, girth, girth_profile, odd_girth
from .graph import (
    CaterpillarSpine,
    GraphError,
    SimpleGraph,
    Thread,
    build_graph,
    caterpillar_cycle,
    caterpillar_path,
    conflict_graph,
    find_thread,
    format_graph,
    generate,
    lift_caterpillar,
    parse_graph,
    peel_pendants,
    petersen_graph,
    read_graph,
)
from .oddgraph import (
    OddGraph,
    SpecialWalk,
    SubsetVertex,
    WalkError,
    classify_pair,
    edge_label,
    format_walk,
    neighbor_via_label,
    odd_graph,
    parse_walk,
    shortest_even_distance,
    six_cycle_through,
    walk_from_labels,
)
from .reduction import (
    AlgorithmMode,
    ReductionStuck,
    ReductionTrace,
    SparseResult,
    color_caterpillar_cycle,
    extend_over_caterpillar,
    extend_pendant,
    replay_trace,
    strong_color_sparse,
)
from .walks import (
    WalkRequest,
    closed_special_walk,
    construct_avoiding_walk,
    construct_prescribed_walk,
    dp_special_walk,
)
from .audit import cw_audit, sharpness_audit

__version__ = "0.1.0"

__all__ = [
    "AlgorithmMode",
    "CaterpillarSpine",
    "ColoringError",
    "Density",
    "ExactResult",
    "GirthProfile",
    "GraphError",
    "OddGraph",
    "ReductionStuck",
    "ReductionTrace",
    "SimpleGraph",
    "SparseResult",
    "SpecialWalk",
    "StrongColoring",
    "SubsetVertex",
    "Thread",
    "WalkError",
    "WalkRequest",
    "build_graph",
    "caterpillar_cycle",
    "caterpillar_path",
    "classify_pair",
    "closed_special_walk",
    "color_caterpillar_cycle",
    "conflict_graph",
    "construct_avoiding_walk",
    "construct_prescribed_walk",
    "cw_audit",
    "dp_special_walk",
    "edge_label",
    "even_girth",
    "exact_strong_chromatic_index",
    "extend_over_caterpillar",
    "extend_pendant",
    "find_thread",
    "format_coloring",
    "format_graph",
    "format_walk",
    "generate",
    "girth",
    "girth_profile",
    "greedy_strong_coloring",
    "is_strong_coloring",
    "lift_caterpillar",
    "mad",
    "mad_bruteforce",
    "neighbor_via_label",
    "odd_girth",
    "odd_graph",
    "parse_coloring",
    "parse_graph",
    "parse_walk",
    "peel_pendants",
    "petersen_graph",
    "read_graph",
    "replay_trace",
    "sharpness_audit",
    "shortest_even_distance",
    "six_cycle_through",
    "strong_chromatic_index_bruteforce",
    "strong_color_sparse",
    "strong_coloring_with",
    "verify_strong_coloring",
    "walk_from_labels",
]
