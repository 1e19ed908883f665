"""Exact tools for Seidel matrices, switching classes and equiangular lines."""

from .core import (
    AmbientGraph,
    CharPoly,
    SeidelMatrix,
    SwitchingOperation,
    ambient_graph,
    charpoly_exact,
    det_exact,
    format_seidel,
    graph6_decode,
    graph6_encode,
    parse_seidel,
    permanent_exact,
    rank_exact,
    seidel_of_graph,
    switch,
)

__version__ = "0.1.0"

__all__ = [
    "AmbientGraph",
    "CharPoly",
    "SeidelMatrix",
    "SwitchingOperation",
    "ambient_graph",
    "charpoly_exact",
    "det_exact",
    "format_seidel",
    "graph6_decode",
    "graph6_encode",
    "parse_seidel",
    "permanent_exact",
    "rank_exact",
    "seidel_of_graph",
    "switch",
    "__version__",
]
