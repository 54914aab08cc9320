"""Conflict-free coloring and choosability toolkit.

Graph/hypergraph conflict-free coloring: verifiers, exact desk-scale
solvers, the randomized CFCN* pipeline for K_{1,k}-free graphs, and
constructive NP-hardness reduction builders.
"""

from cfcolor.graphs import Graph, Hypergraph
from cfcolor.coloring import ListAssignment, PartialColoring
from cfcolor.errors import BudgetExceededError, InputFormatError

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "Hypergraph",
    "ListAssignment",
    "PartialColoring",
    "BudgetExceededError",
    "InputFormatError",
]
