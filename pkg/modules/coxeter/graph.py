"""
CoxeterGraph - the commutation graph of a right-angled Coxeter system.
An edge between s and t means m(s,t) = 2, a missing edge means m(s,t) = inf.
"""
import itertools
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

import networkx as nx

from .errors import CoxeterError, UnknownGeneratorError


@dataclass(frozen=True)
class CoxeterGraph:
    generators: Tuple[str, ...]
    edges: FrozenSet[FrozenSet[str]]
    _rank: Dict[str, int] = field(default=None, init=False, repr=False, compare=False, hash=False)
    _links: Dict[str, FrozenSet[str]] = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise CoxeterError(f"Duplicate generator labels in {list(self.generators)}")
        for label in self.generators:
            if not label or label == "e" or any(ch.isspace() or ch in "[]" for ch in label):
                raise CoxeterError(f"Invalid generator label: {label!r}")

        links: Dict[str, set] = {s: set() for s in self.generators}
        for edge in self.edges:
            pair = tuple(edge)
            if len(pair) != 2:
                raise CoxeterError(f"Self-edge or malformed edge: {sorted(edge)}")
            s, t = pair
            for label in pair:
                if label not in links:
                    raise UnknownGeneratorError(f"Edge {sorted(edge)} uses unknown generator '{label}'")
            links[s].add(t)
            links[t].add(s)

        object.__setattr__(self, "_rank", {s: i for i, s in enumerate(self.generators)})
        object.__setattr__(self, "_links", {s: frozenset(v) for s, v in links.items()})

    @classmethod
    def build(cls, generators: Sequence[str], edges: Iterable[Sequence[str]] = ()) -> "CoxeterGraph":
        edge_set = set()
        for edge in edges:
            if len(edge) != 2 or edge[0] == edge[1]:
                raise CoxeterError(f"Self-edge or malformed edge: {list(edge)}")
            edge_set.add(frozenset(edge))
        return cls(tuple(generators), frozenset(edge_set))

    @classmethod
    def from_dict(cls, data: Dict) -> "CoxeterGraph":
        if "generators" not in data:
            raise CoxeterError("Graph description is missing 'generators'")
        return cls.build(data["generators"], data.get("edges", []))

    def to_dict(self) -> Dict:
        edges = sorted(sorted(e, key=self.rank) for e in self.edges)
        return {"generators": list(self.generators), "edges": edges}

    # Accessors

    def __contains__(self, label: str) -> bool:
        return label in self._rank

    def rank(self, label: str) -> int:
        try:
            return self._rank[label]
        except KeyError:
            raise UnknownGeneratorError(f"Unknown generator '{label}'")

    def commutes(self, s: str, t: str) -> bool:
        """True iff s != t and m(s,t) = 2."""
        return t in self._links[s]

    def link(self, s: str) -> FrozenSet[str]:
        self.rank(s)
        return self._links[s]

    def star(self, s: str) -> FrozenSet[str]:
        return self.link(s) | {s}

    def link_of(self, subset: Iterable[str]) -> FrozenSet[str]:
        """Link(X) as the intersection of the links; Link of the empty set is every generator."""
        result = frozenset(self.generators)
        for s in subset:
            result &= self.link(s)
        return result

    def sort_letters(self, letters: Iterable[str]) -> List[str]:
        return sorted(letters, key=self.rank)

    # Derived graphs

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.generators)
        g.add_edges_from(tuple(e) for e in self.edges)
        return g

    def subgraph(self, subset: Iterable[str]) -> "CoxeterGraph":
        keep = set(subset)
        for s in keep:
            self.rank(s)
        generators = tuple(s for s in self.generators if s in keep)
        edges = frozenset(e for e in self.edges if e <= keep)
        return CoxeterGraph(generators, edges)

    def free_version(self) -> "CoxeterGraph":
        return CoxeterGraph(self.generators, frozenset())

    def is_free(self) -> bool:
        return not self.edges

    def non_adjacent_triples(self) -> Iterable[Tuple[str, str, str]]:
        for triple in itertools.combinations(self.generators, 3):
            if not any(self.commutes(a, b) for a, b in itertools.combinations(triple, 2)):
                yield triple

    def __str__(self):
        edges = ", ".join("-".join(self.sort_letters(e)) for e in sorted(self.edges, key=lambda e: sorted(map(self.rank, e))))
        return f"CoxeterGraph({' '.join(self.generators)}; {edges or 'no edges'})"
