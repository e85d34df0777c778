"""
Basis maps between the GNS space of W and that of the free group on the same
letters, under which a general component becomes its free counterpart:

    X = R^* o X_free o Q   on every basis vector of a ball.
"""
import logging
from typing import Optional, Tuple

from modules.coxeter import (
    Clique,
    CoxeterGraph,
    PreconditionError,
    Word,
    enumerate_ball,
    inverse,
    left_descents,
    multiply,
    prefixes,
    reduce,
    right_descents,
)
from modules.utils import CheckResult

from .components import KhintchineComponent

logger = logging.getLogger("Intertwiners")


def _split(v: Word, head_length: int, clique: Clique, end: Clique, graph: CoxeterGraph) -> Optional[Tuple[Word, Word]]:
    """
    The decomposition v = h V_G0 t with |h| = head_length, additive lengths and
    RDesc(h) & Link(G0) = end; None when there is none.
    """
    link = graph.link_of(clique)
    found = None
    for h in prefixes(v, graph):
        if len(h) != head_length:
            continue
        rest = multiply(inverse(h, graph), v, graph)
        if not clique <= left_descents(rest, graph):
            continue
        if right_descents(h, graph) & link != end:
            continue
        if found is not None:
            raise PreconditionError(f"[{v}] splits in more than one way for {sorted(clique)}")
        found = (h, reduce(tuple(graph.sort_letters(clique)) + rest.letters, graph))
    return found


def _tail_letters(clique: Clique, tail: Word, graph: CoxeterGraph) -> Tuple[str, ...]:
    return tuple(graph.sort_letters(clique)) + tail.letters


def q_map(v: Word, component: KhintchineComponent, graph: CoxeterGraph) -> Optional[Word]:
    """Q(delta_v): the head h (|h| = number of annihilators) is spelled as reverse(nf(h^-1))."""
    _, _, _, right, _ = component.block
    split = _split(v, len(component.annihilators), component.clique, frozenset(right), graph)
    if split is None:
        return None
    h, tail = split
    letters = tuple(reversed(inverse(h, graph).letters)) + _tail_letters(component.clique, tail, graph)
    return Word(letters)


def r_map(y: Word, component: KhintchineComponent, graph: CoxeterGraph) -> Optional[Word]:
    """R(delta_y): the head h (|h| = number of creators) is spelled as nf(h)."""
    _, _, left, _, _ = component.block
    split = _split(y, len(component.creators), component.clique, frozenset(left), graph)
    if split is None:
        return None
    h, tail = split
    return Word(h.letters + _tail_letters(component.clique, tail, graph))


def r_adjoint(u: Word, component: KhintchineComponent, graph: CoxeterGraph) -> Optional[Word]:
    """R^*(delta_u) = delta_y when u = R(y) for the element y that u spells in W, else 0."""
    y = reduce(u.letters, graph)
    return y if r_map(y, component, graph) == u else None


def intertwiner_check(component: KhintchineComponent, graph: CoxeterGraph, N: int) -> CheckResult:
    """
    Compares X(delta_v) with R^* X_free Q(delta_v) for every v in B_N, where
    X_free is the same component acting on the free group.
    """
    if len(component.block) != 5:
        raise PreconditionError(f"Component {component.block} does not come from jd_general")
    free = graph.free_version()
    result = CheckResult("intertwiner", {"block": component.block, "N": N})
    for v in enumerate_ball(graph, N):
        direct = component.apply(v, graph)
        routed = None
        u = q_map(v, component, graph)
        if u is not None:
            hit = component.apply(u, free)
            if hit is not None:
                y = r_adjoint(hit[0], component, graph)
                if y is not None:
                    routed = (y, hit[1])
        result.record(direct == routed, v=v, direct=direct, routed=routed)
    return result
