"""
Numeric witnesses: truncated matrices of symbolic operators on ball bases,
largest singular values and the approximation gap of Psi_{<=n} o Phi_r.
"""
import logging
import math
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from modules.config import get_limit
from modules.coxeter import ConvergenceError, CoxeterGraph, PreconditionError, Word, enumerate_ball
from modules.hecke import HeckeElement, OperatorTerm, matrix_entries

from .projections import wordlength_projection
from .radial import radial_multiplier

logger = logging.getLogger("Norms")


@dataclass
class TruncatedMatrix:
    rows: List[Word]
    cols: List[Word]
    entries: np.ndarray
    q: float

    @property
    def shape(self) -> Tuple[int, int]:
        return self.entries.shape

    def entry(self, y: Word, x: Word) -> float:
        return float(self.entries[self.rows.index(y), self.cols.index(x)])


def truncated_matrix(terms: Sequence[OperatorTerm], graph: CoxeterGraph, N: int, q: float) -> TruncatedMatrix:
    """Entry (y, x) = <Op T_x Omega, T_y Omega> at q, for x in B_N and y in the image."""
    if q <= 0:
        raise PreconditionError(f"q must be positive, got {q}")
    cols = enumerate_ball(graph, N)
    columns = [matrix_entries(terms, x, graph) for x in cols]
    row_set = {y for column in columns for y in column}
    rows = sorted(row_set, key=lambda w: w.sort_key(graph))
    index = {y: i for i, y in enumerate(rows)}
    entries = np.zeros((len(rows), len(cols)))
    for j, column in enumerate(columns):
        for y, c in column.items():
            entries[index[y], j] = c.evaluate(q)
    return TruncatedMatrix(rows, cols, entries, q)


def power_norm(a: np.ndarray, iterations: int, tol: float) -> float:
    """Largest singular value by power iteration on A^T A."""
    gram = a.T @ a if a.shape[0] >= a.shape[1] else a @ a.T
    rng = np.random.default_rng(0)
    x = rng.normal(size=gram.shape[0])
    x /= np.linalg.norm(x)
    previous = 0.0
    for _ in range(iterations):
        y = gram @ x
        norm = np.linalg.norm(y)
        if norm == 0.0:
            return 0.0
        x = y / norm
        if abs(norm - previous) <= tol * max(norm, 1.0):
            return math.sqrt(norm)
        previous = norm
    raise ConvergenceError(f"Power iteration did not settle within {iterations} steps")


def operator_norm_lower(terms: Sequence[OperatorTerm], graph: CoxeterGraph, N: int, q: float, tol: float = 1e-9) -> float:
    """
    Largest singular value of the truncated matrix from B_N; nondecreasing in N
    and a lower bound for the operator norm.

    Raises:
        ConvergenceError: if the SVD or the power iteration fails.
    """
    matrix = truncated_matrix(terms, graph, N, q)
    if matrix.entries.size == 0:
        return 0.0
    if max(matrix.shape) > int(get_limit("dense_svd_limit")):
        logger.info(f"Truncated matrix {matrix.shape} exceeds the dense limit, using power iteration")
        return power_norm(matrix.entries, int(get_limit("power_iterations")), tol)
    try:
        return float(np.linalg.svd(matrix.entries, compute_uv=False)[0])
    except np.linalg.LinAlgError as e:
        raise ConvergenceError(f"SVD failed on a {matrix.shape} matrix: {e}")


def ccap_gap(a: HeckeElement, r, n: int, q: float) -> float:
    approx = wordlength_projection(n, radial_multiplier(r, a))
    return (approx - a).norm2(q)


def ccap_convergence_demo(graph: CoxeterGraph, a: HeckeElement, schedule: Iterable[Tuple[float, int]], q: float = 1.0) -> List[float]:
    """||Psi_{<=n}(Phi_r(a)) - a||_2 at q along the schedule."""
    if a.graph != graph:
        raise PreconditionError(f"Element is not over {graph}")
    return [ccap_gap(a, r, n, q) for r, n in schedule]


def default_schedule(steps: int) -> List[Tuple[float, int]]:
    """r = 1 - 2^-k, n = k."""
    return [(1 - 2.0 ** -k, k) for k in range(1, steps + 1)]
