import logging
from functools import lru_cache
from typing import List, Optional, Tuple

from modules.config import get_ball_cap

from .errors import PreconditionError, ResourceLimitError
from .graph import CoxeterGraph
from .words import IDENTITY, Word, left_descents, reduce

logger = logging.getLogger("Ball")


@lru_cache(maxsize=64)
def _ball_levels(graph: CoxeterGraph, N: int, cap: int) -> Tuple[Tuple[Word, ...], ...]:
    levels = [(IDENTITY,)]
    total = 1
    for _ in range(N):
        nxt = set()
        for w in levels[-1]:
            blocked = left_descents(w, graph)
            for s in graph.generators:
                if s not in blocked:
                    nxt.add(reduce((s,) + w.letters, graph))
        total += len(nxt)
        if total > cap:
            raise ResourceLimitError(f"Ball of radius {N} exceeds the cap of {cap} words")
        levels.append(tuple(sorted(nxt, key=lambda w: w.sort_key(graph))))
        if not nxt:
            break
    return tuple(levels)


def enumerate_ball(graph: CoxeterGraph, N: int, cap: Optional[int] = None) -> List[Word]:
    """
    All group elements of length <= N, sorted by (length, ShortLex).

    Raises:
        ResourceLimitError: if the ball holds more than `cap` words
            (defaults to the configured limit, see HECKE_MAX_BALL).
    """
    if N < 0:
        raise PreconditionError(f"Ball radius must be nonnegative, got {N}")
    cap = cap if cap is not None else get_ball_cap()
    levels = _ball_levels(graph, N, cap)
    logger.debug(f"Ball of radius {N} over {graph}: {sum(len(l) for l in levels)} words")
    return [w for level in levels for w in level]


def sphere(graph: CoxeterGraph, k: int, cap: Optional[int] = None) -> List[Word]:
    return [w for w in enumerate_ball(graph, k, cap) if len(w) == k]
