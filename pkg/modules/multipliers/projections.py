"""
Word-length projections, the homogeneous-degree selections Phi_i and rho_k on
expansion terms, signed set vectors and the alternating prefix-projection identity.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List

from modules.coxeter import (
    Clique,
    CoxeterGraph,
    PreconditionError,
    Word,
    clique_word,
    enumerate_ball,
    enumerate_cliques,
    is_prefix,
    multiply,
    right_descents,
    subcliques,
)
from modules.hecke import HeckeElement, OperatorTerm, with_degree
from modules.utils import CheckResult


def wordlength_projection(n: int, a: HeckeElement) -> HeckeElement:
    """Psi_{<=n}: keeps the terms with |w| <= n."""
    if n < 0:
        raise PreconditionError(f"n must be nonnegative, got {n}")
    return HeckeElement(a.graph, {w: c for w, c in a.terms.items() if len(w) <= n})


def wordlength_slice(n: int, a: HeckeElement) -> HeckeElement:
    """Psi_n = Psi_{<=n} - Psi_{<=n-1}."""
    return HeckeElement(a.graph, {w: c for w, c in a.terms.items() if len(w) == n})


def phi_component(i: int, terms: Iterable[OperatorTerm]) -> List[OperatorTerm]:
    """
    The degree-i part of an operator: only matrix entries (y, x) with
    |x| - |y| = i survive. A term with |u'| creators and |u''| annihilators
    moves length by at most |u'| + |u''| and preserves that parity, so other
    terms are dropped; the rest are tagged with degree i.
    """
    selected = []
    for term in terms:
        reach = term.creates + term.annihilates
        if abs(i) > reach or (reach - i) % 2:
            continue
        selected.append(with_degree(term, i))
    return selected


def rho_component(k: int, terms: Iterable[OperatorTerm]) -> List[OperatorTerm]:
    """Terms with |u'| + |u''| = k."""
    return [t for t in terms if t.creates + t.annihilates == k]


@dataclass(frozen=True)
class SignedSetVector:
    """
    sum over B subset of the support of sign^{|B|} delta_B, a vector in the
    l2 space of finite subsets of the generators.
    """
    support: Clique
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise PreconditionError(f"sign must be +1 or -1, got {self.sign}")

    def expand(self) -> Dict[FrozenSet[str], int]:
        return {sub: self.sign ** len(sub) for sub in subcliques(self.support)}

    def inner(self, other: "SignedSetVector") -> int:
        """Closed form: 2^{|A & B|} for equal signs, [A & B empty] otherwise."""
        common = self.support & other.support
        if self.sign == other.sign:
            return 2 ** len(common)
        return 0 if common else 1

    def inner_expanded(self, other: "SignedSetVector") -> int:
        mine, theirs = self.expand(), other.expand()
        return sum(c * theirs[b] for b, c in mine.items() if b in theirs)

    def norm2(self) -> int:
        return self.inner(self)


def pairing_table_check(graph: CoxeterGraph) -> CheckResult:
    """Closed-form pairings against the expanded vectors for every pair of cliques."""
    result = CheckResult("signed-set-pairing", {"graph": str(graph)})
    cliques = list(enumerate_cliques(graph))
    for a in cliques:
        for b in cliques:
            for sa in (1, -1):
                for sb in (1, -1):
                    u, v = SignedSetVector(a, sa), SignedSetVector(b, sb)
                    result.record(u.inner(v) == u.inner_expanded(v), a=a, b=b, signs=(sa, sb))
    return result


@lru_cache(maxsize=1 << 14)
def _plus_interval(w: Word, graph: CoxeterGraph) -> FrozenSet[Word]:
    blocked = right_descents(w, graph)
    return frozenset(
        multiply(w, clique_word(c, graph), graph) for c in enumerate_cliques(graph) if not (c & blocked)
    )


def delta_identity_check(w: Word, graph: CoxeterGraph, N: int) -> CheckResult:
    """
    Q_w = sum over v in C(w,+) of (-1)^{|w^-1 v|} P_v, where Q_w is the
    projection onto T_w Omega. Both sides are evaluated on every basis vector
    of B_N; they are diagonal, so each x contributes one scalar comparison.
    """
    if len(w) > N:
        raise PreconditionError(f"|w| = {len(w)} exceeds the ball radius {N}")
    result = CheckResult("qw-identity", {"w": w, "N": N})
    plus = _plus_interval(w, graph)
    for x in enumerate_ball(graph, N):
        rhs = sum((-1) ** (len(v) - len(w)) for v in plus if is_prefix(v, x, graph))
        lhs = 1 if x == w else 0
        result.record(lhs == rhs, x=x, lhs=lhs, rhs=rhs)
    return result
