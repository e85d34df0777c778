"""
Creation - diagonal - annihilation calculus on the GNS basis.

An OperatorTerm stands for weight * T1_{u'} P_{d} T1_{u''}, where T1 is the
group action (a basis permutation) and P_d the prefix projection. The
expansion T_w = sum over A_w of p^{|G0|} T1_{w'} P_{G0} T1_{w''} is produced
by t_expansion and replayed exactly by apply_terms.
"""
from dataclasses import dataclass, replace
from typing import Dict, Iterable, List, Optional, Tuple

from modules.coxeter import (
    IDENTITY,
    Clique,
    CoxeterGraph,
    PreconditionError,
    Word,
    clique_word,
    enumerate_cliques,
    inverse,
    is_prefix,
    left_descents,
    multiply,
    prefixes,
    right_descents,
    suffixes,
)

from .element import HeckeElement
from .scalars import ONE, P, ZERO, PolyScalar


@dataclass(frozen=True)
class OperatorTerm:
    creator: Word
    diagonal: Word
    annihilator: Word
    weight: PolyScalar = ONE
    # When set, only outputs y with |x| - |y| == degree survive
    degree: Optional[int] = None

    def apply(self, v: Word, graph: CoxeterGraph) -> Optional[Tuple[Word, PolyScalar]]:
        z = multiply(self.annihilator, v, graph)
        if not is_prefix(self.diagonal, z, graph):
            return None
        y = multiply(self.creator, z, graph)
        if self.degree is not None and len(v) - len(y) != self.degree:
            return None
        return y, self.weight

    @property
    def creates(self) -> int:
        return len(self.creator)

    @property
    def annihilates(self) -> int:
        return len(self.annihilator)

    def describe(self) -> str:
        parts = []
        if self.creator.letters:
            parts.append(f"T1[{self.creator}]")
        if self.diagonal.letters:
            parts.append(f"P[{self.diagonal}]")
        if self.annihilator.letters:
            parts.append(f"T1[{self.annihilator}]")
        body = " ".join(parts) if parts else "1"
        coef = "" if self.weight == ONE else (f"{self.weight} " if self.weight.is_monomial() else f"({self.weight}) ")
        return f"{coef}{body}"


def apply_terms(terms: Iterable[OperatorTerm], a: HeckeElement, graph: CoxeterGraph) -> HeckeElement:
    """Sum of the terms applied to the GNS vector a."""
    terms = list(terms)
    out: Dict[Word, PolyScalar] = {}
    for v, c in a.terms.items():
        for term in terms:
            hit = term.apply(v, graph)
            if hit is not None:
                y, weight = hit
                out[y] = out.get(y, ZERO) + c * weight
    return HeckeElement(graph, out)


def matrix_entries(terms: Iterable[OperatorTerm], x: Word, graph: CoxeterGraph) -> Dict[Word, PolyScalar]:
    """Column x of the operator: y -> <Op T_x Omega, T_y Omega>."""
    return apply_terms(terms, HeckeElement.basis(x, graph), graph).terms


@dataclass(frozen=True)
class ExpansionTriple:
    w_prime: Word
    clique: Clique
    w_doubleprime: Word

    def word(self, graph: CoxeterGraph) -> Word:
        return multiply(multiply(self.w_prime, clique_word(self.clique, graph), graph), self.w_doubleprime, graph)

    def __str__(self) -> str:
        return f"([{self.w_prime}], {{{', '.join(sorted(self.clique))}}}, [{self.w_doubleprime}])"


def _blocked_tail(clique: Clique, graph: CoxeterGraph) -> frozenset:
    # Letters that commute with every letter of the clique word
    return frozenset(clique) | graph.link_of(clique)


def enumerate_Aw(w: Word, graph: CoxeterGraph) -> List[ExpansionTriple]:
    """
    All triples (w', G0, w'') with w = w' V_G0 w'' (additive lengths) such
    that no letter commuting with V_G0 is a right descent of w'. For G0 empty
    the condition covers every generator, so only (e, {}, w) appears.
    """
    triples = []
    for clique in sorted(enumerate_cliques(graph), key=lambda c: (len(c), graph.sort_letters(c))):
        blocked = _blocked_tail(clique, graph)
        cw = clique_word(clique, graph)
        for head in sorted(prefixes(w, graph), key=lambda u: u.sort_key(graph)):
            if right_descents(head, graph) & blocked:
                continue
            rest = multiply(inverse(head, graph), w, graph)
            if not clique <= left_descents(rest, graph):
                continue
            triples.append(ExpansionTriple(head, clique, multiply(cw, rest, graph)))
    return triples


def _check_triple(t: ExpansionTriple, graph: CoxeterGraph) -> Word:
    cw = clique_word(t.clique, graph)
    w = t.word(graph)
    if len(w) != len(t.w_prime) + len(cw) + len(t.w_doubleprime):
        raise PreconditionError(f"{t} does not multiply out with additive lengths")
    if right_descents(t.w_prime, graph) & _blocked_tail(t.clique, graph):
        raise PreconditionError(f"{t}: w' ends in a letter commuting with the clique")
    return w


def breakdown(t: ExpansionTriple, graph: CoxeterGraph) -> Tuple[Word, Word, Word]:
    """
    Finds the longest u that is a suffix of w' and whose inverse cancels
    against the start of w''. Returns (u, u', u'') with u' = w' u^-1 and
    u'' = u w'', so that T1_{w'} P_G0 T1_{w''} = T1_{u'} P_{u G0} T1_{u''}.

    Raises:
        PreconditionError: if t is not a valid expansion triple.
    """
    _check_triple(t, graph)
    best = IDENTITY
    for u in suffixes(t.w_prime, graph):
        if len(multiply(u, t.w_doubleprime, graph)) != len(t.w_doubleprime) - len(u):
            continue
        if len(u) > len(best) or (len(u) == len(best) and u.sort_key(graph) < best.sort_key(graph)):
            best = u
    u_prime = multiply(t.w_prime, inverse(best, graph), graph)
    u_doubleprime = multiply(best, t.w_doubleprime, graph)
    return best, u_prime, u_doubleprime


def triple_term(t: ExpansionTriple, graph: CoxeterGraph) -> OperatorTerm:
    return OperatorTerm(t.w_prime, clique_word(t.clique, graph), t.w_doubleprime, P ** len(t.clique))


def breakdown_term(t: ExpansionTriple, graph: CoxeterGraph) -> OperatorTerm:
    u, u_prime, u_doubleprime = breakdown(t, graph)
    diagonal = multiply(u, clique_word(t.clique, graph), graph)
    return OperatorTerm(u_prime, diagonal, u_doubleprime, P ** len(t.clique))


def t_expansion(w: Word, graph: CoxeterGraph, broken_down: bool = False) -> List[OperatorTerm]:
    """
    T_w as a list of OperatorTerms, one per triple of A_w with weight p^{|G0|}.

    Args:
        broken_down: emit each term in its reduced (u', u G0, u'') form.
    """
    build = breakdown_term if broken_down else triple_term
    return [build(t, graph) for t in enumerate_Aw(w, graph)]


def with_degree(term: OperatorTerm, degree: Optional[int]) -> OperatorTerm:
    return replace(term, degree=degree)
