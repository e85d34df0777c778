"""
Successor automaton of the ShortLex normal-form language.

A state is the set F of letters that may not come next. Appending b (b not in F)
moves to F' = {b} | {a < b : a commutes with b} | {a in F : a commutes with b}:
b itself would cancel, a smaller commuting letter would sort in front of b,
and older constraints survive only through letters commuting with b.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Tuple

import numpy as np

from modules.coxeter import CoxeterGraph

State = FrozenSet[str]


@dataclass(frozen=True)
class SuccessorAutomaton:
    states: Tuple[State, ...]
    # transitions[i] lists (letter, j) for each admissible next letter
    transitions: Tuple[Tuple[Tuple[str, int], ...], ...]

    @property
    def start(self) -> int:
        return 0

    def __len__(self) -> int:
        return len(self.states)


def step(state: State, b: str, graph: CoxeterGraph) -> State:
    rb = graph.rank(b)
    nxt = {b}
    for a in graph.link(b):
        if graph.rank(a) < rb or a in state:
            nxt.add(a)
    return frozenset(nxt)


@lru_cache(maxsize=64)
def successor_automaton(graph: CoxeterGraph) -> SuccessorAutomaton:
    index: Dict[State, int] = {frozenset(): 0}
    order: List[State] = [frozenset()]
    edges: List[List[Tuple[str, int]]] = []
    i = 0
    while i < len(order):
        state = order[i]
        out = []
        for b in graph.generators:
            if b in state:
                continue
            target = step(state, b, graph)
            if target not in index:
                index[target] = len(order)
                order.append(target)
            out.append((b, index[target]))
        edges.append(out)
        i += 1
    return SuccessorAutomaton(tuple(order), tuple(tuple(e) for e in edges))


def transfer_matrix(graph: CoxeterGraph) -> np.ndarray:
    """M[j, i] = number of letters leading from state i to state j."""
    automaton = successor_automaton(graph)
    n = len(automaton)
    matrix = np.zeros((n, n), dtype=np.int64)
    for i, out in enumerate(automaton.transitions):
        for _, j in out:
            matrix[j, i] += 1
    return matrix


def transfer_counts(graph: CoxeterGraph, K: int) -> List[int]:
    """a_0..a_K by pushing the start vector through the transfer matrix in exact integers."""
    matrix = transfer_matrix(graph).astype(object)
    vector = np.zeros(matrix.shape[0], dtype=object)
    vector[0] = 1
    counts = [1]
    for _ in range(K):
        vector = matrix.dot(vector)
        counts.append(int(sum(vector)))
    return counts


def dominant_eigenvalue(graph: CoxeterGraph) -> float:
    eigenvalues = np.linalg.eigvals(transfer_matrix(graph).astype(float))
    return float(np.max(np.abs(eigenvalues))) if eigenvalues.size else 0.0
