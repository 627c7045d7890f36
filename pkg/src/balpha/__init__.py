"""Spectral toolkit for the convex family ``B_alpha(G) = alpha*A(G) + (1 - alpha)*L(G)``."""

from . import bounds, corpus, family, formats, graph, linalg, sachs, verify
from .errors import BudgetExceededError, ConvergenceError, GraphFormatError, IsolatedVertexError
from .family import as_alpha, b_alpha, beta_o, spectrum
from .graph import Graph

__version__ = "0.1.0"

__all__ = [
    "bounds", "corpus", "family", "formats", "graph", "linalg", "sachs", "verify",
    "BudgetExceededError", "ConvergenceError", "GraphFormatError", "IsolatedVertexError",
    "Graph", "as_alpha", "b_alpha", "beta_o", "spectrum",
]
