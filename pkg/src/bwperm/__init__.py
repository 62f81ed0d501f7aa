"""Black-and-white colorings of permutation graphs by scanline dynamic programming."""

from .frontier import Frontier, frontier_convolve, frontier_shift, frontier_union
from .instances import GeneratorConfig, export_edges, generate_random, render_diagram
from .model import (
    Color,
    Coloring,
    ParseError,
    Permutation,
    Piece,
    Scanline,
    ScanlineChain,
    Side,
    adjacency,
    compatible,
    components,
    crosses,
    inside,
    parse_permutation,
    segment_side,
    verify_coloring,
)
from .oracle import (
    GeneralGraph,
    OracleGuardError,
    exhaustive_check,
    oracle_decide,
    oracle_frontier,
    parse_edge_list,
)
from .solver import PieceSolver, Witness, chain_frontier, decide, piece_table, witness

__version__ = "0.1.0"

__all__ = [
    "Color",
    "Coloring",
    "Frontier",
    "GeneralGraph",
    "GeneratorConfig",
    "OracleGuardError",
    "ParseError",
    "Permutation",
    "Piece",
    "PieceSolver",
    "Scanline",
    "ScanlineChain",
    "Side",
    "Witness",
    "adjacency",
    "chain_frontier",
    "compatible",
    "components",
    "crosses",
    "decide",
    "exhaustive_check",
    "export_edges",
    "frontier_convolve",
    "frontier_shift",
    "frontier_union",
    "generate_random",
    "inside",
    "oracle_decide",
    "oracle_frontier",
    "parse_edge_list",
    "parse_permutation",
    "piece_table",
    "render_diagram",
    "segment_side",
    "verify_coloring",
    "witness",
]
