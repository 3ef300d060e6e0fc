"""Distributed betweenness centrality: distance-vector protocol simulator and oracles."""

from ._core import (
    CountOverflowError,
    Graph,
    MetricUndefinedError,
    NotConvergedError,
    ParseError,
    ValidationError,
    brandes,
    generate,
    load_edge_file,
    load_edges,
    metrics,
    optimal_frequency,
    simulate,
    to_edge_text,
)

__all__ = [
    "CountOverflowError",
    "Graph",
    "MetricUndefinedError",
    "NotConvergedError",
    "ParseError",
    "ValidationError",
    "brandes",
    "generate",
    "load_edge_file",
    "load_edges",
    "metrics",
    "optimal_frequency",
    "simulate",
    "to_edge_text",
]
