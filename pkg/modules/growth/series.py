"""
Word counts, the fundamental power series and the factoriality interval.
"""
import json
import logging
import math
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Tuple

from modules.config import get_limit
from modules.coxeter import CoxeterError, CoxeterGraph, PreconditionError, enumerate_ball, is_reduced_system

from .automaton import dominant_eigenvalue, transfer_counts

logger = logging.getLogger("Growth")

FACTOR = "Factor"
FACTOR_PLUS_C = "FactorPlusC"
BOUNDARY = "boundary"
NOT_APPLICABLE = "not-applicable"


def bfs_counts(graph: CoxeterGraph, K: int) -> List[int]:
    counts = [0] * (K + 1)
    for w in enumerate_ball(graph, K):
        counts[len(w)] += 1
    return counts


def count_by_length(graph: CoxeterGraph, K: int, method: str = "both") -> List[int]:
    """
    a_k = #{w : |w| = k} for k <= K.

    Args:
        method: "bfs", "transfer-matrix" or "both" (both are computed and must agree).

    Raises:
        PreconditionError: if K < 0 or the method is unknown.
        CoxeterError: if the two oracles disagree.
    """
    if K < 0:
        raise PreconditionError(f"K must be nonnegative, got {K}")
    if method == "transfer-matrix":
        return transfer_counts(graph, K)
    if method == "bfs":
        return bfs_counts(graph, K)
    if method != "both":
        raise PreconditionError(f"Unknown counting method: {method}")

    by_matrix = transfer_counts(graph, K)
    by_bfs = bfs_counts(graph, K)
    if by_matrix != by_bfs:
        logger.error(f"Count mismatch on {graph}: bfs={by_bfs} transfer={by_matrix}")
        raise CoxeterError(f"BFS and transfer-matrix counts disagree on {graph}")
    return by_matrix


def ratio_estimate(graph: CoxeterGraph, tol: float, max_terms: Optional[int] = None) -> Tuple[float, bool]:
    """
    Estimates the growth rate as the ratio a_{k+1}/a_k of exact counts.
    Returns (ratio, converged); the ratio is 0 for finite groups.
    """
    if max_terms is None:
        max_terms = int(get_limit("ratio_terms"))
    counts = transfer_counts(graph, max_terms)
    if counts[-1] == 0:
        return 0.0, True
    previous = None
    ratio = 0.0
    for k in range(1, max_terms):
        if counts[k] == 0:
            return 0.0, True
        ratio = counts[k + 1] / counts[k]
        if previous is not None and abs(ratio - previous) < tol / 10 and k > 8:
            return ratio, True
        previous = ratio
    return ratio, False


def growth_rate(graph: CoxeterGraph, tol: float = 1e-9) -> float:
    """
    Radius of convergence of sum a_k z^k as 1/lambda_max of the transfer
    matrix; math.inf for finite groups.
    """
    if tol <= 0:
        raise PreconditionError(f"tol must be positive, got {tol}")
    lam = dominant_eigenvalue(graph)
    ratio, converged = ratio_estimate(graph, tol)
    if not converged:
        logger.warning(f"Ratio estimate for {graph} did not settle; using the eigenvalue {lam:.12g}")
    elif abs(ratio - lam) > max(10 * tol, 1e-6 * max(lam, 1.0)):
        logger.warning(f"Ratio estimate {ratio:.12g} and eigenvalue {lam:.12g} disagree on {graph}")
    if lam < 1e-12:
        return math.inf
    return 1.0 / lam


def _fmt(x: float) -> str:
    return "inf" if math.isinf(x) else f"{x:g}"


@dataclass
class Classification:
    label: str
    q: float
    rho: Optional[float] = None
    interval: Optional[Tuple[float, float]] = None

    def __str__(self) -> str:
        if self.interval is None:
            return self.label
        lo, hi = self.interval
        relation = "∈" if self.label in (FACTOR, BOUNDARY) else "∉"
        return f"{self.label} (q {relation} [{_fmt(lo)}, {_fmt(hi)}])"

    def to_dict(self) -> dict:
        return {
            "classification": self.label,
            "q": self.q,
            "rho": _fmt(self.rho) if self.rho is not None and math.isinf(self.rho) else self.rho,
            "interval": list(self.interval) if self.interval else None,
        }


def factor_classification(graph: CoxeterGraph, q: float, tol: float = 1e-9) -> Classification:
    """
    Factor when q lies in [rho, 1/rho], FactorPlusC outside it and boundary when
    q is within tol of an endpoint. Only reduced systems with at least three
    generators are classified.
    """
    if q <= 0:
        raise PreconditionError(f"q must be positive, got {q}")
    if len(graph.generators) < 3 or not is_reduced_system(graph):
        return Classification(NOT_APPLICABLE, q)
    rho = growth_rate(graph, tol)
    if math.isinf(rho):
        return Classification(FACTOR, q, rho)
    lo, hi = rho, 1.0 / rho
    if abs(q - lo) <= tol or abs(q - hi) <= tol:
        label = BOUNDARY
    elif lo <= q <= hi:
        label = FACTOR
    else:
        label = FACTOR_PLUS_C
    return Classification(label, q, rho, (lo, hi))


@dataclass
class GrowthReport:
    graph: str
    counts: List[int]
    rho: float
    method: str
    interval: Optional[Tuple[float, float]] = field(default=None)

    def to_dict(self) -> dict:
        return {
            "graph": self.graph,
            "counts": self.counts,
            "rho": "inf" if math.isinf(self.rho) else self.rho,
            "interval": list(self.interval) if self.interval else None,
            "method": self.method,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        lines = ["k,a_k"]
        lines.extend(f"{k},{a}" for k, a in enumerate(self.counts))
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        interval = f"[{_fmt(self.interval[0])}, {_fmt(self.interval[1])}]" if self.interval else "none (finite group)"
        return (
            f"Graph: {self.graph}\n"
            f"Counts: {', '.join(map(str, self.counts))}\n"
            f"rho: {_fmt(self.rho)}\n"
            f"Interval: {interval}\n"
            f"Method: {self.method}\n"
        )


def growth_report(graph: CoxeterGraph, K: int, tol: float = 1e-9, method: str = "both") -> GrowthReport:
    counts = count_by_length(graph, K, method)
    rho = growth_rate(graph, tol)
    interval = None if math.isinf(rho) else (rho, 1.0 / rho)
    tag = "bfs+transfer-matrix" if method == "both" else method
    return GrowthReport(str(graph), counts, rho, tag, interval)


def subsystem_monotonicity_check(graph: CoxeterGraph, subset: Iterable[str], K: int) -> List[int]:
    """Lengths k where the sub-system has more words than the full system (expected empty)."""
    sub = graph.subgraph(subset)
    small = transfer_counts(sub, K)
    large = transfer_counts(graph, K)
    return [k for k in range(K + 1) if small[k] > large[k]]
