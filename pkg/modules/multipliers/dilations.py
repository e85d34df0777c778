"""
beta coefficients and the dilations U_a^+/- that carry the word-length cut-off.

    U_a^s delta_x = sum_{g <= x} sum_{L in g(2,{})} beta^s_{g,x,L,a}
                    delta_g (x) delta_{g^-1 x} (x) delta_{g(2,L)} (x) xi_L^s
"""
import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, Tuple, Union

from modules.coxeter import (
    Clique,
    CoxeterGraph,
    PreconditionError,
    Word,
    clique_split,
    clique_word,
    enumerate_ball,
    enumerate_cliques,
    interval_set,
    inverse,
    multiply,
    prefixes,
    right_descents,
    subcliques,
)

from .projections import SignedSetVector

logger = logging.getLogger("Dilations")

Sign = Union[str, int]


def normalize_sign(sign: Sign) -> int:
    if sign in ("+", 1, "plus"):
        return 1
    if sign in ("-", -1, "minus"):
        return -1
    raise PreconditionError(f"Unknown sign {sign!r}")


def f_indicator(v: Word, lam: Iterable[str], a: int, graph: CoxeterGraph) -> int:
    """F_{L,a}(v) = 1 iff 2|v(1,L)| + |v(2,L)| <= a."""
    head, tail = clique_split(v, lam, graph)
    return 1 if 2 * len(head) + len(tail) <= a else 0


@lru_cache(maxsize=1 << 18)
def _beta_plus(g: Word, x: Word, lam: Clique, a: int, graph: CoxeterGraph) -> int:
    total = 0
    for v in interval_set(g, x, graph):
        total += (-1) ** (len(v) - len(g)) * f_indicator(v, lam, a, graph)
    return total


def beta_coefficient(sign: Sign, g: Word, x: Word, lam: Iterable[str], a: int, graph: CoxeterGraph) -> int:
    """
    beta^+ is the alternating sum of F_{L,a} over C(g,x); beta^- is its support indicator.

    Raises:
        PreconditionError: if g is not a prefix of x or L is not inside g(2,{}).
    """
    lam = frozenset(lam)
    if not lam <= right_descents(g, graph):
        raise PreconditionError(f"{sorted(lam)} is not contained in the end clique of [{g}]")
    plus = _beta_plus(g, x, lam, a, graph)
    if normalize_sign(sign) == 1:
        return plus
    return 1 if plus else 0


@dataclass(frozen=True)
class DilationTerm:
    g: Word
    h: Word
    d: Word
    xi: SignedSetVector
    coeff: int


@dataclass
class DilationVector:
    terms: List[DilationTerm] = field(default_factory=list)

    def inner(self, other: "DilationVector") -> int:
        """Legs pair independently; the last leg through the signed set rule."""
        index: Dict[Tuple[Word, Word, Word], List[DilationTerm]] = {}
        for t in other.terms:
            index.setdefault((t.g, t.h, t.d), []).append(t)
        total = 0
        for t in self.terms:
            for s in index.get((t.g, t.h, t.d), ()):
                total += t.coeff * s.coeff * t.xi.inner(s.xi)
        return total

    def norm(self) -> float:
        return math.sqrt(self.inner(self))

    def triangle_bound(self) -> float:
        return sum(abs(t.coeff) * math.sqrt(t.xi.norm2()) for t in self.terms)

    def __len__(self) -> int:
        return len(self.terms)


def dilation_apply(sign: Sign, a: int, x: Word, graph: CoxeterGraph) -> DilationVector:
    if a < 0:
        raise PreconditionError(f"a must be nonnegative, got {a}")
    s = normalize_sign(sign)
    out = DilationVector()
    for g in sorted(prefixes(x, graph), key=lambda w: w.sort_key(graph)):
        end = right_descents(g, graph)
        tail = multiply(inverse(g, graph), x, graph)
        for lam in subcliques(end):
            beta = beta_coefficient(s, g, x, lam, a, graph)
            if beta:
                out.terms.append(DilationTerm(g, tail, clique_word(end - lam, graph), SignedSetVector(lam, s), beta))
    return out


def dilation_norm(sign: Sign, a: int, x: Word, graph: CoxeterGraph) -> float:
    return dilation_apply(sign, a, x, graph).norm()


def max_clique_size(graph: CoxeterGraph) -> int:
    return max(len(c) for c in enumerate_cliques(graph))


def window_count(x: Word, a: int, graph: CoxeterGraph) -> int:
    """#{g <= x : (a - 2M - 1)/2 <= |g| <= a} with M the largest clique size."""
    low = (a - 2 * max_clique_size(graph) - 1) / 2
    return sum(1 for g in prefixes(x, graph) if low <= len(g) <= a)


def upol_scan(graph: CoxeterGraph, radius: int, a_values: Iterable[int]) -> List[dict]:
    """
    For each a and sign, the largest ||U_a delta_x|| over the ball together
    with the triangle bound and the prefix window count at the maximizer.
    """
    ball = enumerate_ball(graph, radius)
    rows = []
    for a in a_values:
        for sign in (1, -1):
            best, best_x, best_vec = -1.0, None, None
            for x in ball:
                vec = dilation_apply(sign, a, x, graph)
                n = vec.norm()
                if n > best:
                    best, best_x, best_vec = n, x, vec
            rows.append({
                "a": a,
                "sign": "+" if sign == 1 else "-",
                "norm": best,
                "triangle_bound": best_vec.triangle_bound(),
                "window": window_count(best_x, a, graph),
                "witness": str(best_x),
            })
            logger.debug(f"U_{a}{'+' if sign == 1 else '-'} on B_{radius}: {best:.6g} at [{best_x}]")
    return rows
