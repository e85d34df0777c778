"""
Khintchine decomposition of T_{w_1} ... T_{w_d} into creation - diagonal -
annihilation blocks.

Each block acts on T_v Omega as: strip the annihilation letters (each one
must shorten), require the clique word as a prefix, then prepend the creation
letters (each one must lengthen).
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from modules.coxeter import (
    Clique,
    CoxeterGraph,
    PreconditionError,
    Word,
    cliques_by_size,
    clique_word,
    commuting_pairs,
    enumerate_ball,
    inverse,
    is_prefix,
    left_descents,
    multiply,
    prefixes,
    reduce,
    right_descents,
)
from modules.hecke import ONE, P, ZERO, HeckeElement, PolyScalar, basis_product
from modules.utils import CheckResult

logger = logging.getLogger("Khintchine")


@dataclass(frozen=True)
class KhintchineComponent:
    block: tuple
    creators: Tuple[str, ...]
    clique: Clique
    annihilators: Tuple[str, ...]
    weight: PolyScalar = ONE
    sigma: Optional[Tuple[int, ...]] = field(default=None, compare=False)

    @property
    def admissible(self) -> bool:
        return bool(self.weight)

    def apply(self, v: Word, graph: CoxeterGraph) -> Optional[Tuple[Word, PolyScalar]]:
        if not self.weight:
            return None
        z = v
        for s in reversed(self.annihilators):
            if s not in left_descents(z, graph):
                return None
            z = reduce((s,) + z.letters, graph)
        if not is_prefix(clique_word(self.clique, graph), z, graph):
            return None
        for s in reversed(self.creators):
            if s in left_descents(z, graph):
                return None
            z = reduce((s,) + z.letters, graph)
        return z, self.weight

    def describe(self) -> str:
        parts = []
        if self.creators:
            parts.append(f"C[{' '.join(self.creators)}]")
        if self.clique:
            parts.append(f"P{{{', '.join(sorted(self.clique))}}}")
        if self.annihilators:
            parts.append(f"A[{' '.join(self.annihilators)}]")
        return f"{self.weight} * {' '.join(parts) or '1'}"


def apply_components(components: Sequence[KhintchineComponent], v: Word, graph: CoxeterGraph) -> Dict[Word, PolyScalar]:
    out: Dict[Word, PolyScalar] = {}
    for component in components:
        hit = component.apply(v, graph)
        if hit is not None:
            y, weight = hit
            out[y] = out.get(y, ZERO) + weight
    return {y: c for y, c in out.items() if c}


def _require_reduced(letters: Sequence[str], graph: CoxeterGraph) -> Word:
    w = reduce(letters, graph)
    if len(w) != len(letters):
        raise PreconditionError(f"[{' '.join(letters)}] is not a reduced word")
    return w


def jd_free(letters: Sequence[str], graph: CoxeterGraph) -> List[KhintchineComponent]:
    """
    d + 1 split blocks (first k letters create, the rest annihilate) and d |S|
    diagonal blocks P_s in slot k + 1, weighted p when s = w_{k+1} and 0 otherwise.
    """
    if not graph.is_free():
        raise PreconditionError(f"jd_free needs an edgeless graph, got {graph}")
    letters = tuple(letters)
    _require_reduced(letters, graph)
    d = len(letters)
    components = [
        KhintchineComponent(("split", k), letters[:k], frozenset(), letters[k:], ONE) for k in range(d + 1)
    ]
    for k in range(d):
        for s in graph.generators:
            weight = P if s == letters[k] else ZERO
            components.append(KhintchineComponent(("diag", k, s), letters[:k], frozenset({s}), letters[k + 1:], weight))
    return components


def factorizations(w: Word, k: int, clique: Clique, graph: CoxeterGraph) -> List[Tuple[Word, Word]]:
    """All (w', w'') with w = w' V_G0 w'', additive lengths and |w'| = k."""
    cw = clique_word(clique, graph)
    found = []
    for head in prefixes(w, graph):
        if len(head) != k:
            continue
        rest = multiply(inverse(head, graph), w, graph)
        if clique <= left_descents(rest, graph):
            found.append((head, multiply(cw, rest, graph)))
    return sorted(found, key=lambda pair: pair[0].sort_key(graph))


def _sigma(letters: Sequence[str], arranged: Sequence[str]) -> Optional[Tuple[int, ...]]:
    # Stable: equal letters keep their relative order
    queues: Dict[str, deque] = {}
    for i, s in enumerate(letters):
        queues.setdefault(s, deque()).append(i)
    sigma = []
    for s in arranged:
        if not queues.get(s):
            return None
        sigma.append(queues[s].popleft())
    return tuple(sigma)


def index_set(graph: CoxeterGraph, d: int):
    """(l, G0, G1, G2, k) for l <= d, G0 in Cliq(G, l), (G1, G2) in Comm(G0), k <= d - l."""
    grouped = cliques_by_size(graph)
    for l in sorted(grouped):
        if l > d:
            break
        for clique in grouped[l]:
            for left, right in commuting_pairs(clique, graph):
                for k in range(d - l + 1):
                    yield l, clique, left, right, k


def jd_general(letters: Sequence[str], graph: CoxeterGraph) -> List[KhintchineComponent]:
    """
    One component per index (l, G0, G1, G2, k). It is admissible when
    w = w' V_G0 w'' with |w'| = k, the end clique of w' meets Link(G0) in G1
    and the start clique of w'' meets Link(G0) in G2; otherwise its weight is 0.
    """
    letters = tuple(letters)
    w = _require_reduced(letters, graph)
    components = []
    for l, clique, left, right, k in index_set(graph, len(letters)):
        link = graph.link_of(clique)
        tag = (l, tuple(graph.sort_letters(clique)), tuple(graph.sort_letters(left)), tuple(graph.sort_letters(right)), k)
        match = None
        for head, tail in factorizations(w, k, clique, graph):
            if right_descents(head, graph) & link == left and left_descents(tail, graph) & link == right:
                match = (head, tail)
                break
        if match is None:
            components.append(KhintchineComponent(tag, (), clique, (), ZERO))
            continue
        head, tail = match
        arranged = head.letters + tuple(graph.sort_letters(clique)) + tail.letters
        components.append(KhintchineComponent(tag, head.letters, clique, tail.letters, P ** l, _sigma(letters, arranged)))
    return components


def summand_count(graph: CoxeterGraph, d: int) -> int:
    """sum over l, G0 in Cliq(G, l) of |Comm(G0)| (d - l + 1)."""
    grouped = cliques_by_size(graph)
    return sum(
        len(commuting_pairs(clique, graph)) * (d - l + 1)
        for l, cliques in grouped.items()
        if l <= d
        for clique in cliques
    )


def uniqueness_check(w: Word, graph: CoxeterGraph) -> CheckResult:
    """For every (k, G0, G1) at most one factorization has end clique G1 against Link(G0)."""
    result = CheckResult("uniqueness", {"w": w})
    for l, cliques in cliques_by_size(graph).items():
        if l > len(w):
            continue
        for clique in cliques:
            link = graph.link_of(clique)
            for k in range(len(w) - l + 1):
                counts: Dict[frozenset, int] = {}
                for head, _ in factorizations(w, k, clique, graph):
                    key = right_descents(head, graph) & link
                    counts[key] = counts.get(key, 0) + 1
                for key, n in counts.items():
                    result.record(n <= 1, k=k, clique=clique, end=key, count=n)
    return result


def verify_factorization(letters: Sequence[str], graph: CoxeterGraph, N: int) -> CheckResult:
    """
    T_{w_1} ... T_{w_d} T_v against the sum of the jd_general components
    applied to T_v, for every v in B_N; on edgeless graphs jd_free is checked too.
    """
    letters = tuple(letters)
    w = _require_reduced(letters, graph)
    result = CheckResult("factorization", {"word": w, "N": N})
    families = [jd_general(letters, graph)]
    if graph.is_free():
        families.append(jd_free(letters, graph))
    for v in enumerate_ball(graph, N):
        expected = HeckeElement(graph, basis_product(w, v, graph)).terms
        for components in families:
            got = apply_components(components, v, graph)
            result.record(got == expected, v=v, got=got, want=expected)
    return result


def free_agreement(letters: Sequence[str], graph: CoxeterGraph) -> bool:
    """Nonzero jd_general components coincide with the nonzero jd_free ones."""

    def shape(components):
        return sorted(
            (c.creators, tuple(sorted(c.clique)), c.annihilators, str(c.weight)) for c in components if c.admissible
        )

    return shape(jd_general(letters, graph)) == shape(jd_free(letters, graph))
