"""Exact solver and verification suite for graph pebbling and its
exactly-one ("singular") variant on small simple graphs.

Core API lives here; the HTTP layer is pebbling.service and the CLI is
pebbling.cli.
"""

__version__ = "0.1.0"

from .errors import (
    FormatError,
    PebblingError,
    PebbleOverflowError,
    SearchLimitError,
    UsageError,
)
from .game import (
    PEBBLE_CAP,
    Configuration,
    GoalMode,
    Move,
    apply_move,
    enumerate_configurations,
    is_goal,
    legal_moves,
)
from .graphs import (
    Graph,
    complete,
    cycle,
    encode_graph6,
    enumerate_connected_graphs,
    format_edge_list,
    parse_edge_list,
    parse_graph6,
    path,
    star,
)
from .solver import (
    INFINITE,
    DirectSearch,
    ExtendedCount,
    FastSolver,
    SolveResult,
    find_unsolvable_witness,
    is_infinite,
    pebbling_number,
    singular_pebbling_number,
    solvable,
    solvable_exactly_one_fast,
    weight_prune,
)

__all__ = [
    "PEBBLE_CAP",
    "INFINITE",
    "Configuration",
    "DirectSearch",
    "ExtendedCount",
    "FastSolver",
    "FormatError",
    "GoalMode",
    "Graph",
    "Move",
    "PebbleOverflowError",
    "PebblingError",
    "SearchLimitError",
    "SolveResult",
    "UsageError",
    "apply_move",
    "complete",
    "cycle",
    "encode_graph6",
    "enumerate_configurations",
    "enumerate_connected_graphs",
    "find_unsolvable_witness",
    "format_edge_list",
    "is_goal",
    "is_infinite",
    "legal_moves",
    "parse_edge_list",
    "parse_graph6",
    "path",
    "pebbling_number",
    "singular_pebbling_number",
    "solvable",
    "solvable_exactly_one_fast",
    "star",
    "weight_prune",
]
