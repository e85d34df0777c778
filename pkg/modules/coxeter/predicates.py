"""
Graph-level predicates used by the hypothesis checks: reducedness of the
system, hyperbolicity (no induced square) and the separating vertex search.
"""
import itertools
from typing import Optional

import networkx as nx

from .errors import PreconditionError
from .graph import CoxeterGraph


def is_reduced_system(graph: CoxeterGraph) -> bool:
    """True iff the complement of the commutation graph is connected."""
    if not graph.generators:
        return False
    return nx.is_connected(nx.complement(graph.to_networkx()))


def find_induced_square(graph: CoxeterGraph) -> Optional[tuple]:
    g = graph.to_networkx()
    for quad in itertools.combinations(graph.generators, 4):
        sub = g.subgraph(quad)
        if sub.number_of_edges() == 4 and all(d == 2 for _, d in sub.degree()):
            return quad
    return None


def is_hyperbolic(graph: CoxeterGraph) -> bool:
    """Right-angled criterion: no induced 4-cycle in the commutation graph."""
    return find_induced_square(graph) is None


def find_separating_vertex(graph: CoxeterGraph) -> str:
    """
    Returns the first vertex v (in generator order) with at least two
    vertices outside Star(v).

    Raises:
        PreconditionError: if the graph is not reduced or has fewer than 3 vertices.
    """
    if len(graph.generators) < 3 or not is_reduced_system(graph):
        raise PreconditionError(f"{graph} must be reduced with at least 3 vertices")
    everything = set(graph.generators)
    for v in graph.generators:
        if len(everything - graph.star(v)) >= 2:
            return v
    raise PreconditionError(f"No separating vertex found in {graph}")
