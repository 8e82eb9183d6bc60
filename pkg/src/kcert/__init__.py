"""Semi-streaming sparse certificates for k-vertex-connectivity."""

from .analysis import SeparatorSet, all_separators, cut_vertices, extract_separator, is_k_connected
from .cert_a1 import A1State, a1_run
from .cert_a2 import A2State, a2_run
from .dsu import DisjointSets
from .flow import BACKEND, local_connectivity, min_vertex_cut
from .graph import MemoryBudget, SparseGraph, connected_components
from .sfs import SfsState
from .stream_io import Edge, EdgeStream, StreamFormatError, open_stream, write_stream

__all__ = [
    "A1State", "A2State", "BACKEND", "DisjointSets", "Edge", "EdgeStream", "MemoryBudget",
    "SeparatorSet", "SfsState", "SparseGraph", "StreamFormatError", "a1_run", "a2_run",
    "all_separators", "connected_components", "cut_vertices", "extract_separator",
    "is_k_connected", "local_connectivity", "min_vertex_cut", "open_stream", "write_stream",
]
