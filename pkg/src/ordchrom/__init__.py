"""Chromatic thresholds of ordered graphs avoiding an ordered pattern."""

from .core import GraphFormatError, OrderedGraph, contains, find_embedding, og, parse_graph
from .bounds import classify, color_avoider, derive_upper_bound

__version__ = "0.1.0"

__all__ = [
    "GraphFormatError", "OrderedGraph", "classify", "color_avoider", "contains",
    "derive_upper_bound", "find_embedding", "og", "parse_graph",
]
