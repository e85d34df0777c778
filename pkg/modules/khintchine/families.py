"""
Diagonal word families: words A_i B_i of length 2d whose first halves are
pairwise distinct and whose second halves are pairwise distinct.
"""
import itertools
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from modules.coxeter import CoxeterGraph, PreconditionError, Word, multiply, reduce

FREE3 = "free3"
RST = "rst"
VARIANTS = (FREE3, RST)


@dataclass
class DiagonalFamily:
    variant: str
    d: int
    halves: List[Tuple[Word, Word]]
    graph: CoxeterGraph

    @property
    def words(self) -> List[Word]:
        return [multiply(a, b, self.graph) for a, b in self.halves]

    def __len__(self) -> int:
        return len(self.halves)

    def to_dict(self) -> dict:
        return {
            "variant": self.variant,
            "d": self.d,
            "size": len(self),
            "words": [f"[{a}] [{b}]" for a, b in self.halves],
        }


def diagonal_condition(family: DiagonalFamily) -> bool:
    """Equal first halves or equal second halves only for equal indices, every word of length 2d."""
    firsts = [a for a, _ in family.halves]
    seconds = [b for _, b in family.halves]
    if len(set(firsts)) != len(firsts) or len(set(seconds)) != len(seconds):
        return False
    return all(len(w) == 2 * family.d for w in family.words)


def _alternating(letters: Sequence[str], length: int, first: Sequence[str] = ()) -> List[Tuple[str, ...]]:
    # Sequences with no two equal neighbours, extending a fixed start
    out = []
    start = tuple(first)
    for rest in itertools.product(letters, repeat=length - len(start)):
        word = start + rest
        if all(word[i] != word[i + 1] for i in range(len(word) - 1)):
            out.append(word)
    return out


def _free_triple(graph: CoxeterGraph) -> Tuple[str, str, str]:
    for triple in graph.non_adjacent_triples():
        return triple
    raise PreconditionError(f"{graph} has no three pairwise non-commuting generators")


def _rst_pattern(graph: CoxeterGraph) -> Tuple[str, str, str]:
    """(r, s, t) with r - t an edge and s adjacent to neither."""
    for r, s, t in itertools.permutations(graph.generators, 3):
        if graph.rank(r) < graph.rank(t) and graph.commutes(r, t) and not graph.commutes(r, s) and not graph.commutes(s, t):
            return r, s, t
    raise PreconditionError(f"{graph} has no r - t edge with a generator s adjacent to neither")


def _pair(graph: CoxeterGraph, firsts, seconds) -> List[Tuple[Word, Word]]:
    key = lambda letters: [graph.rank(x) for x in letters]
    firsts = sorted(firsts, key=key)
    seconds = sorted(seconds, key=key)
    return [(reduce(a, graph), reduce(b, graph)) for a, b in zip(firsts, seconds)]


def diagonal_family(graph: CoxeterGraph, d: int, variant: str = FREE3) -> DiagonalFamily:
    """
    free3, sizes 2^(d-1): A = w_1 ... w_{d-1} s with w_{d-1} != s, B = t followed
    by d - 1 letters, over three pairwise free generators (s, t, r).

    rst, odd d, sizes 2^((d-1)/2): A = a_1 s a_3 s ... s r and
    B = t s a_1 s a_3 ... with every a_i in {r, t}.

    The two lists are paired in lexicographic order.
    """
    if d < 1:
        raise PreconditionError(f"d must be positive, got {d}")
    if variant == FREE3:
        s, t, r = _free_triple(graph)
        letters = (s, t, r)
        firsts = [w + (s,) for w in _alternating(letters, d - 1) if not w or w[-1] != s]
        seconds = _alternating(letters, d, first=(t,))
    elif variant == RST:
        if d % 2 == 0:
            raise PreconditionError(f"The rst family needs odd d, got {d}")
        r, s, t = _rst_pattern(graph)
        free_slots = (d - 1) // 2
        firsts, seconds = [], []
        for choice in itertools.product((r, t), repeat=free_slots):
            a = []
            for c in choice:
                a.extend((c, s))
            firsts.append(tuple(a) + (r,))
            b = [t]
            for c in choice:
                b.extend((s, c))
            seconds.append(tuple(b))
    else:
        raise PreconditionError(f"Unknown variant {variant!r}, expected one of {VARIANTS}")
    return DiagonalFamily(variant, d, _pair(graph, firsts, seconds), graph)
