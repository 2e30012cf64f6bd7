"""F-index, Zagreb indices and coindices of derived graphs, with oracles."""

from .closed_forms import example_formulas, f_closed, fbar_closed, fbar_identity, m1_closed
from .derived import (
    DerivedGraph,
    DerivedKind,
    EdgeVertex,
    Original,
    SubdividedHalf,
    construct,
    edge_semitotal,
    line_graph,
    paraline,
    subdivision,
    total_graph,
    vertex_semitotal,
)
from .errors import (
    CountMismatch,
    DuplicateEdge,
    EndpointOutOfRange,
    FormatSyntaxError,
    GraphError,
    InvalidProbability,
    LoopEdge,
    SizeTooSmall,
)
from .graph import Graph, complement_pairs, degrees, is_connected, make_graph
from .indices import IndexReport, f_coindex_direct, f_index, m1, m2, report, rezg3, xi4

__all__ = [
    "CountMismatch",
    "DerivedGraph",
    "DerivedKind",
    "DuplicateEdge",
    "EdgeVertex",
    "EndpointOutOfRange",
    "FormatSyntaxError",
    "Graph",
    "GraphError",
    "IndexReport",
    "InvalidProbability",
    "LoopEdge",
    "Original",
    "SizeTooSmall",
    "SubdividedHalf",
    "complement_pairs",
    "construct",
    "degrees",
    "edge_semitotal",
    "example_formulas",
    "f_closed",
    "f_coindex_direct",
    "f_index",
    "fbar_closed",
    "fbar_identity",
    "is_connected",
    "line_graph",
    "m1",
    "m1_closed",
    "m2",
    "make_graph",
    "paraline",
    "report",
    "rezg3",
    "subdivision",
    "total_graph",
    "vertex_semitotal",
    "xi4",
]
