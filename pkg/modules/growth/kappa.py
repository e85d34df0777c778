"""
Prefix counting: kappa_x(a) = #{w <= x : |w| = a} and its polynomial bound.
"""
import logging
from dataclasses import dataclass
from typing import Optional

from modules.coxeter import CoxeterGraph, PreconditionError, Word, enumerate_ball, is_prefix, prefixes

logger = logging.getLogger("Kappa")


def kappa_count(x: Word, a: int, graph: CoxeterGraph) -> int:
    if not 0 <= a <= len(x):
        raise PreconditionError(f"a must lie in [0, {len(x)}], got {a}")
    return sum(1 for w in prefixes(x, graph) if len(w) == a)


def kappa_oracle(x: Word, a: int, graph: CoxeterGraph) -> int:
    """Recount by testing every word of length a in the ball against x."""
    return sum(1 for w in enumerate_ball(graph, a) if len(w) == a and is_prefix(w, x, graph))


@dataclass
class KappaReport:
    graph: str
    N: int
    exponent: int
    C: float
    witness: Optional[Word]
    witness_a: int
    words_checked: int

    def to_dict(self) -> dict:
        return {
            "graph": self.graph,
            "N": self.N,
            "exponent": self.exponent,
            "C": self.C,
            "witness": str(self.witness) if self.witness is not None else None,
            "witness_a": self.witness_a,
            "words_checked": self.words_checked,
        }


def kappa_bound_check(graph: CoxeterGraph, N: int) -> KappaReport:
    """
    Smallest C with kappa_x(a) <= C a^(|V|-2) over x in B_N and 1 <= a <= |x|,
    together with the (x, a) attaining it.
    """
    exponent = len(graph.generators) - 2
    best, witness, witness_a = 0.0, None, 0
    ball = enumerate_ball(graph, N)
    for x in ball:
        for a in range(1, len(x) + 1):
            ratio = kappa_count(x, a, graph) / float(a) ** exponent
            if ratio > best:
                best, witness, witness_a = ratio, x, a
    logger.info(f"kappa bound on {graph}, N={N}: C={best:.6g} at x=[{witness}], a={witness_a}")
    return KappaReport(str(graph), N, exponent, best, witness, witness_a, len(ball))
