"""
Non-injectivity crossover arithmetic and the block-matrix norm estimates used
by the Khintchine upper bound.
"""
import logging
import math
from typing import Dict, Hashable, Iterable, List, Tuple

import numpy as np

from modules.coxeter import CoxeterGraph, PreconditionError, enumerate_ball, left_descents, reduce, enumerate_cliques, commuting_pairs

from .families import FREE3, RST, VARIANTS

logger = logging.getLogger("Crossover")

MAX_D = 100000

# r - t edge, s free: the smallest graph carrying the rst family
RST_GRAPH = CoxeterGraph.build(["r", "s", "t"], [("r", "t")])


def rst_constant() -> int:
    """sum over cliques G0 of |Comm(G0)| on the rst graph."""
    return sum(len(commuting_pairs(c, RST_GRAPH)) for c in enumerate_cliques(RST_GRAPH))


def crossover_sides(d: int, p: float, S_count: int, variant: str) -> Tuple[float, float]:
    """(lower bound from the family size, Khintchine upper bound) at block length d."""
    growth = 1 + (d + 1) * p
    if variant == FREE3:
        lhs = 2.0 ** (d - 1)
        rhs = 2.0 ** ((d - 1) / 2) * growth * ((2 * d + 1) + 2 * d * S_count)
    elif variant == RST:
        lhs = 2.0 ** ((d - 1) / 2)
        rhs = 2.0 ** ((d - 1) / 4) * growth * rst_constant() * (2 * d) ** 2
    else:
        raise PreconditionError(f"Unknown variant {variant!r}, expected one of {VARIANTS}")
    return lhs, rhs


def crossover(p: float, S_count: int, variant: str = FREE3) -> int:
    """
    Smallest d (odd d for rst) with lhs > rhs.

    Raises:
        PreconditionError: if S_count < 3, p < 0, or S_count != 3 for rst.
    """
    if S_count < 3:
        raise PreconditionError(f"S_count must be at least 3, got {S_count}")
    if p < 0:
        raise PreconditionError(f"p must be nonnegative, got {p}")
    if variant == RST and S_count != 3:
        raise PreconditionError(f"The rst crossover is defined on three generators, got {S_count}")
    step = 2 if variant == RST else 1
    for d in range(1, MAX_D, step):
        lhs, rhs = crossover_sides(d, p, S_count, variant)
        if lhs > rhs:
            return d
    raise PreconditionError(f"No crossover below d = {MAX_D} for p = {p}")


def crossover_report(p: float, S_count: int, variant: str = FREE3) -> dict:
    d_star = crossover(p, S_count, variant)
    lhs, rhs = crossover_sides(d_star, p, S_count, variant)
    logger.info(f"crossover {variant} p={p} |S|={S_count}: d*={d_star}")
    return {"variant": variant, "p": p, "S_count": S_count, "d_star": d_star, "lhs": lhs, "rhs": rhs}


Block = Tuple[Hashable, Hashable, float]


def _row_columns(blocks: Iterable[Block]) -> Dict[Hashable, Hashable]:
    columns: Dict[Hashable, Hashable] = {}
    for row, col, _ in blocks:
        if columns.setdefault(row, col) != col:
            raise PreconditionError(f"Row {row!r} meets two column groups: {columns[row]!r} and {col!r}")
    return columns


def structured_norm_bound(blocks: List[Block]) -> float:
    """sqrt of the summed squared block norms, valid when every row meets one column group."""
    _row_columns(blocks)
    return math.sqrt(sum(c * c for _, _, c in blocks))


def dense_norm(blocks: List[Block]) -> float:
    """Scalar blocks laid out as a dense matrix; its spectral norm."""
    _row_columns(blocks)
    rows = sorted({row for row, _, _ in blocks}, key=repr)
    cols = sorted({col for _, col, _ in blocks}, key=repr)
    matrix = np.zeros((len(rows), len(cols)))
    for row, col, c in blocks:
        matrix[rows.index(row), cols.index(col)] += c
    return float(np.linalg.norm(matrix, 2)) if matrix.size else 0.0


def column_row_check(coeffs: Dict[str, float], N: int, tol: float = 1e-9) -> bool:
    """
    On the free group over the coefficient letters, sum_s c_s T1_s P_s^perp
    from B_N to B_{N+1} has norm sqrt(sum c_s^2).
    """
    graph = CoxeterGraph.build(sorted(coeffs), [])
    cols = enumerate_ball(graph, N)
    rows = enumerate_ball(graph, N + 1)
    index = {w: i for i, w in enumerate(rows)}
    matrix = np.zeros((len(rows), len(cols)))
    for j, v in enumerate(cols):
        blocked = left_descents(v, graph)
        for s, c in coeffs.items():
            if s not in blocked:
                matrix[index[reduce((s,) + v.letters, graph)], j] += c
    measured = float(np.linalg.norm(matrix, 2))
    expected = math.sqrt(sum(c * c for c in coeffs.values()))
    return abs(measured - expected) <= tol * max(expected, 1.0)
