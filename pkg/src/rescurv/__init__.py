"""Resistance curvature of finite connected graphs."""

from .curvature import CurvatureResult, curvature, dl_curvature, is_constant
from .families import FamilySpec, generate, oracle_curvature
from .graph import Graph, bfs_distances, is_bipartite, laplacian, parse_edge_list
from .resistance import ResistanceData, kirchhoff_index, resistance_matrix
from .verify import TheoremReport, verify_all

__all__ = [
    "CurvatureResult",
    "FamilySpec",
    "Graph",
    "ResistanceData",
    "TheoremReport",
    "bfs_distances",
    "curvature",
    "dl_curvature",
    "generate",
    "is_bipartite",
    "is_constant",
    "kirchhoff_index",
    "laplacian",
    "oracle_curvature",
    "parse_edge_list",
    "resistance_matrix",
    "verify_all",
]

__version__ = "0.1.0"
