"""Finite k-graphs, satiated collections and boundary-path representations."""

from ._core import Collection, Graph, KgckError, run

__all__ = ["Collection", "Graph", "KgckError", "run"]
