"""Metric, edge and mixed metric dimension of Johnson graphs."""

from johnsondim.graph import Graph, GraphStats, all_pairs_distances, build_graph, graph_stats
from johnsondim.johnson import johnson_graph, subset_distance

__all__ = [
    "Graph",
    "GraphStats",
    "all_pairs_distances",
    "build_graph",
    "graph_stats",
    "johnson_graph",
    "subset_distance",
]

__version__ = "0.1.0"
