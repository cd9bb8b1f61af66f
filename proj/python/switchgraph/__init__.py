"""Fixed-margin binary matrices, checkerboard switches and spectral radius."""

from ._switchgraph import (
    BinaryMatrix,
    Graph,
    Sign,
    SwitchCoord,
    analyze_graph,
    apply_switch,
    build_path,
    check_conditions,
    classify,
    compute_T,
    enumerate_margins,
    find_checkerboards,
    format_matrix,
    gen_erdos_renyi,
    gen_small_world,
    gen_split_zebra,
    optimize,
    parse_matrix,
    potential,
    sort_by_degree,
    verify_class,
)

__all__ = [
    "BinaryMatrix",
    "Graph",
    "Sign",
    "SwitchCoord",
    "analyze_graph",
    "apply_switch",
    "build_path",
    "check_conditions",
    "classify",
    "compute_T",
    "enumerate_margins",
    "find_checkerboards",
    "format_matrix",
    "gen_erdos_renyi",
    "gen_small_world",
    "gen_split_zebra",
    "optimize",
    "parse_matrix",
    "potential",
    "sort_by_degree",
    "verify_class",
]
