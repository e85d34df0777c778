"""
Clique and interval combinatorics: clique words, the v = v(1,L) v(2,L)
split, the maximal clique prefix L_{g,x} and the intervals C(g,x), C(g,+).
"""
import itertools
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple

import networkx as nx

from .errors import NotACliqueError, PreconditionError
from .graph import CoxeterGraph
from .words import (
    Word,
    inverse,
    is_prefix,
    left_descents,
    multiply,
    reduce,
    right_descents,
)

Clique = FrozenSet[str]
EMPTY_CLIQUE: Clique = frozenset()


def is_clique(vertices: Iterable[str], graph: CoxeterGraph) -> bool:
    vertices = list(vertices)
    for s in vertices:
        graph.rank(s)
    return all(graph.commutes(a, b) for a, b in itertools.combinations(vertices, 2))


def require_clique(vertices: Iterable[str], graph: CoxeterGraph) -> Clique:
    clique = frozenset(vertices)
    if not is_clique(clique, graph):
        raise NotACliqueError(f"{graph.sort_letters(clique)} is not a clique of {graph}")
    return clique


@lru_cache(maxsize=256)
def enumerate_cliques(graph: CoxeterGraph) -> FrozenSet[Clique]:
    """All cliques of the graph, the empty clique included."""
    found = {EMPTY_CLIQUE}
    for clique in nx.enumerate_all_cliques(graph.to_networkx()):
        found.add(frozenset(clique))
    return frozenset(found)


def cliques_by_size(graph: CoxeterGraph) -> Dict[int, List[Clique]]:
    """Cliq(G, l) for every l, each list in a deterministic order."""
    grouped: Dict[int, List[Clique]] = {}
    for clique in enumerate_cliques(graph):
        grouped.setdefault(len(clique), []).append(clique)
    for size in grouped:
        grouped[size].sort(key=lambda c: [graph.rank(s) for s in graph.sort_letters(c)])
    return grouped


def sorted_cliques(graph: CoxeterGraph) -> List[Clique]:
    grouped = cliques_by_size(graph)
    return [c for size in sorted(grouped) for c in grouped[size]]


def cliques_within(subset: Iterable[str], graph: CoxeterGraph) -> List[Clique]:
    """Cliques whose vertices all lie in subset, in deterministic order."""
    allowed = frozenset(subset)
    return [c for c in sorted_cliques(graph) if c <= allowed]


def commuting_pairs(clique: Clique, graph: CoxeterGraph) -> List[Tuple[Clique, Clique]]:
    """Comm(G0): pairs of disjoint cliques of Link(G0)."""
    inside = cliques_within(graph.link_of(clique), graph)
    return [(a, b) for a in inside for b in inside if not (a & b)]


def clique_word(clique: Iterable[str], graph: CoxeterGraph) -> Word:
    return reduce(graph.sort_letters(clique), graph)


def subcliques(clique: Clique) -> List[Clique]:
    items = sorted(clique)
    return [frozenset(c) for r in range(len(items) + 1) for c in itertools.combinations(items, r)]


def clique_split(v: Word, lam: Iterable[str], graph: CoxeterGraph) -> Tuple[Word, Clique]:
    """
    Returns (v(1,L), v(2,L)).

    v(2,{}) is the maximal clique that can be cut off the end of v, which is
    the right descent set of v. v(2,L) removes the letters of L from it.
    """
    lam = require_clique(lam, graph)
    tail = right_descents(v, graph) - lam
    head = multiply(v, clique_word(tail, graph), graph)
    return head, frozenset(tail)


def lambda_clique(g: Word, x: Word, graph: CoxeterGraph) -> Clique:
    """L_{g,x}: the maximal clique at the start of g^-1 x."""
    if not is_prefix(g, x, graph):
        raise PreconditionError(f"[{g}] is not a prefix of [{x}]")
    return left_descents(multiply(inverse(g, graph), x, graph), graph)


def interval_set(g: Word, x: Word, graph: CoxeterGraph) -> Set[Word]:
    """C(g,x) = {w : g <= w <= g L_{g,x}}."""
    lam = lambda_clique(g, x, graph)
    return {multiply(g, clique_word(sub, graph), graph) for sub in subcliques(lam)}


def interval_plus(g: Word, graph: CoxeterGraph) -> Set[Word]:
    """C(g,+): g times any clique with no letter that is a right descent of g."""
    blocked = right_descents(g, graph)
    result = set()
    for clique in enumerate_cliques(graph):
        if not (clique & blocked):
            result.add(multiply(g, clique_word(clique, graph), graph))
    return result


def parity(w: Word) -> int:
    return -1 if len(w) % 2 else 1

