"""
The word-length cut-down Psi_{<=n} rebuilt from dilations:

    Psi_{<=n}(T) = sum_{i=-n}^{n} sigma_{n-i, n+i}(Phi_i(T)),
    sigma_{a,b}(Op) = (U_a^-)^* (Op (x) 1 (x) 1 (x) 1) U_b^+,

checked entrywise and exactly on expansions of T_w.
"""
import logging
from typing import Callable, Dict, Optional

from modules.coxeter import (
    CoxeterGraph,
    PreconditionError,
    Word,
    clique_split,
    enumerate_ball,
    interval_set,
    inverse,
    is_prefix,
    multiply,
    prefixes,
    right_descents,
    subcliques,
)
from modules.hecke import ZERO, PolyScalar, basis_product, matrix_entries, p_value, t_expansion
from modules.utils import CheckResult

from .dilations import beta_coefficient, f_indicator
from .projections import phi_component

logger = logging.getLogger("Cutdown")

Column = Callable[[Word], Dict[Word, PolyScalar]]


def sigma_entry(a: int, b: int, op_column: Column, x: Word, y: Word, graph: CoxeterGraph) -> PolyScalar:
    """
    <sigma_{a,b}(Op) delta_x, delta_y> where op_column(g) maps h to <Op delta_g, delta_h>.

    The sum runs over g <= x and h <= y with g^-1 x = h^-1 y, cliques
    L in g(2,{}) and L' in h(2,{}) with equal leftovers g(2,L) = h(2,L') and L, L' disjoint.
    """
    total = ZERO
    for g in prefixes(x, graph):
        tail = multiply(inverse(g, graph), x, graph)
        h = multiply(y, inverse(tail, graph), graph)
        if not is_prefix(h, y, graph):
            continue
        entry = op_column(g).get(h)
        if not entry:
            continue
        end_g, end_h = right_descents(g, graph), right_descents(h, graph)
        for lam in subcliques(end_g):
            leftover = end_g - lam
            if not leftover <= end_h:
                continue
            lam_prime = end_h - leftover
            if lam & lam_prime:
                continue
            plus = beta_coefficient(1, g, x, lam, b, graph)
            if not plus:
                continue
            minus = beta_coefficient(-1, h, y, lam_prime, a, graph)
            if minus:
                total = total + entry * (plus * minus)
    return total


def _phi_columns(w: Word, graph: CoxeterGraph) -> Column:
    """Columns of Phi_i(T_w) with i fixed per entry by |g| - |h|, built from the broken-down expansion."""
    terms = t_expansion(w, graph, broken_down=True)
    by_degree = {}
    cache: Dict[Word, Dict[Word, PolyScalar]] = {}

    def column(g: Word) -> Dict[Word, PolyScalar]:
        if g not in cache:
            merged: Dict[Word, PolyScalar] = {}
            degrees = {len(g) - len(h) for h in matrix_entries(terms, g, graph)}
            for i in degrees:
                if i not in by_degree:
                    by_degree[i] = phi_component(i, terms)
                merged.update(matrix_entries(by_degree[i], g, graph))
            cache[g] = merged
        return cache[g]

    return column


def cutdown_identity_check(
    n: int,
    graph: CoxeterGraph,
    N: int,
    q: Optional[float] = None,
    word_radius: Optional[int] = None,
    tol: float = 1e-9,
) -> CheckResult:
    """
    For every w in B_{word_radius} (default 2n+2) and every x in B_N, compares
    sum_i sigma_{n-i,n+i}(Phi_i(T_w))_{y,x} with Psi_{<=n}(T_w)_{y,x} for all
    y where either side can be nonzero.

    Entries are compared as polynomials in p. With q given, each entry is
    also compared after substituting p = (q - 1) / sqrt(q).

    Raises:
        PreconditionError: unless 0 <= n <= N - 1 and q > 0.
    """
    if n < 0 or n > N - 1:
        raise PreconditionError(f"cut-down needs 0 <= n <= N - 1, got n={n}, N={N}")
    if q is not None and q <= 0:
        raise PreconditionError(f"q must be positive, got {q}")
    word_radius = 2 * n + 2 if word_radius is None else word_radius
    parameters = {"n": n, "N": N, "word_radius": word_radius}
    if q is not None:
        parameters.update(q=q, p=p_value(q))
    result = CheckResult("cutdown", parameters)
    ball = enumerate_ball(graph, N)
    for w in enumerate_ball(graph, word_radius):
        column = _phi_columns(w, graph)
        for x in ball:
            expected = basis_product(w, x, graph) if len(w) <= n else {}
            candidates = set(expected)
            for g in prefixes(x, graph):
                tail = multiply(inverse(g, graph), x, graph)
                for h in column(g):
                    candidates.add(multiply(h, tail, graph))
            for y in candidates:
                i = len(x) - len(y)
                got = sigma_entry(n - i, n + i, column, x, y, graph) if abs(i) <= n else ZERO
                want = expected.get(y, ZERO)
                agrees = got == want
                if q is not None:
                    agrees = agrees and abs(got.evaluate(q) - want.evaluate(q)) <= tol
                result.record(agrees, w=w, x=x, y=y, got=got, want=want)
    logger.info(f"cutdown n={n} on {graph}: {result.cases_checked} entries, {result.failure_count} failures")
    return result


def aux_sum(x: Word, u_prime: Word, u_doubleprime: Word, v: Word, a: int, graph: CoxeterGraph):
    """
    Returns (lhs, rhs) with m = u' u'' and a' = a - 2|u''| + 2|u'|:

        lhs = sum_{v <= g <= x} beta^+_{g,x,L(g),a} beta^-_{mg,mx,L'(g),a'}
        rhs = F_{L(v),a}(v)

    where L(g) = g(2,{}) minus (mg)(2,{}) and L'(g) = (mg)(2,{}) minus g(2,{}).

    Raises:
        PreconditionError: unless u''^-1 <= v <= x and the length conditions hold.
    """
    m = multiply(u_prime, u_doubleprime, graph)
    _check_shift(x, u_prime, u_doubleprime, graph)
    if not (is_prefix(inverse(u_doubleprime, graph), v, graph) and is_prefix(v, x, graph)):
        raise PreconditionError(f"need [{u_doubleprime}]^-1 <= [{v}] <= [{x}]")
    shifted = a - 2 * len(u_doubleprime) + 2 * len(u_prime)
    mx = multiply(m, x, graph)
    lhs = 0
    for g in prefixes(x, graph):
        if not is_prefix(v, g, graph):
            continue
        mg = multiply(m, g, graph)
        end_g, end_mg = right_descents(g, graph), right_descents(mg, graph)
        plus = beta_coefficient(1, g, x, end_g - end_mg, a, graph)
        if plus:
            lhs += plus * beta_coefficient(-1, mg, mx, end_mg - end_g, shifted, graph)
    mv = multiply(m, v, graph)
    rhs = f_indicator(v, right_descents(v, graph) - right_descents(mv, graph), a, graph)
    return lhs, rhs


def _check_shift(x: Word, u_prime: Word, u_doubleprime: Word, graph: CoxeterGraph):
    # u'' annihilates into x, u' then creates, and u' u'' is reduced
    if not is_prefix(inverse(u_doubleprime, graph), x, graph):
        raise PreconditionError(f"[{u_doubleprime}] does not annihilate into [{x}]")
    inner = multiply(u_doubleprime, x, graph)
    if len(multiply(u_prime, inner, graph)) != len(u_prime) + len(inner):
        raise PreconditionError(f"[{u_prime}] does not create on [{inner}]")
    if len(multiply(u_prime, u_doubleprime, graph)) != len(u_prime) + len(u_doubleprime):
        raise PreconditionError(f"[{u_prime}][{u_doubleprime}] is not reduced")


def aux_sum_check(x: Word, u_prime: Word, u_doubleprime: Word, v: Word, a: int, graph: CoxeterGraph) -> bool:
    lhs, rhs = aux_sum(x, u_prime, u_doubleprime, v, a, graph)
    return lhs == rhs


def _shift_pairs(x: Word, graph: CoxeterGraph, creator_radius: int):
    creators = enumerate_ball(graph, creator_radius)
    for p in prefixes(x, graph):
        u_doubleprime = inverse(p, graph)
        for u_prime in creators:
            try:
                _check_shift(x, u_prime, u_doubleprime, graph)
            except PreconditionError:
                continue
            yield u_prime, u_doubleprime


def aux_sum_scan(graph: CoxeterGraph, N: int, a_values=None, creator_radius: int = 1) -> CheckResult:
    """aux_sum_check over every admissible (x, u', u'', v, a) with x in B_N."""
    result = CheckResult("aux-sum", {"N": N, "creator_radius": creator_radius})
    for x in enumerate_ball(graph, N):
        values = a_values if a_values is not None else range(0, 2 * len(x) + 4)
        for u_prime, u_doubleprime in _shift_pairs(x, graph, creator_radius):
            start = inverse(u_doubleprime, graph)
            for v in prefixes(x, graph):
                if not is_prefix(start, v, graph):
                    continue
                for a in values:
                    lhs, rhs = aux_sum(x, u_prime, u_doubleprime, v, a, graph)
                    result.record(lhs == rhs, x=x, u_prime=u_prime, u_doubleprime=u_doubleprime, v=v, a=a, lhs=lhs, rhs=rhs)
    return result


def beta_reindex_check(graph: CoxeterGraph, N: int, creator_radius: int = 1) -> CheckResult:
    """
    beta^+_{g,x,L(g),a} = beta^+_{mg,mx,L'(g),a - 2|u''| + 2|u'|} for m = u' u''
    and every g with u''^-1 <= g <= x.
    """
    result = CheckResult("beta-reindex", {"N": N, "creator_radius": creator_radius})
    for x in enumerate_ball(graph, N):
        for u_prime, u_doubleprime in _shift_pairs(x, graph, creator_radius):
            m = multiply(u_prime, u_doubleprime, graph)
            mx = multiply(m, x, graph)
            start = inverse(u_doubleprime, graph)
            shift = 2 * len(u_prime) - 2 * len(u_doubleprime)
            for g in prefixes(x, graph):
                if not is_prefix(start, g, graph):
                    continue
                mg = multiply(m, g, graph)
                end_g, end_mg = right_descents(g, graph), right_descents(mg, graph)
                for a in range(0, 2 * len(x) + 4):
                    before = beta_coefficient(1, g, x, end_g - end_mg, a, graph)
                    after = beta_coefficient(1, mg, mx, end_mg - end_g, a + shift, graph)
                    result.record(before == after, x=x, g=g, u_prime=u_prime, u_doubleprime=u_doubleprime, a=a)
    return result


def exclusion_check(x: Word, u_prime: Word, u_doubleprime: Word, graph: CoxeterGraph) -> CheckResult:
    """
    End-clique bookkeeping under m = u' u'' for every u''^-1 <= g <= x and v in C(g, x),
    writing E(w) for w(2,{}):

        (mv)(2, E(mg) - E(g)) = v(2, E(g) - E(mg))
        |(mv)(1, E(mg) - E(g))| = |v(1, E(g) - E(mg))| - |u''| + |u'|
        E(g) - E(mg) = E(g) - E(u''g)
        v(2, E(v) - E(u''v)) = v(2, E(g) - E(u''g))
    """
    _check_shift(x, u_prime, u_doubleprime, graph)
    m = multiply(u_prime, u_doubleprime, graph)
    shift = len(u_prime) - len(u_doubleprime)
    start = inverse(u_doubleprime, graph)
    result = CheckResult("exclusion", {"x": x, "u_prime": u_prime, "u_doubleprime": u_doubleprime})
    for g in prefixes(x, graph):
        if not is_prefix(start, g, graph):
            continue
        end_g = right_descents(g, graph)
        end_mg = right_descents(multiply(m, g, graph), graph)
        end_ug = right_descents(multiply(u_doubleprime, g, graph), graph)
        result.record(end_g - end_mg == end_g - end_ug, g=g, check="annihilator-only")
        for v in interval_set(g, x, graph):
            mv = multiply(m, v, graph)
            head_mv, tail_mv = clique_split(mv, end_mg - end_g, graph)
            head_v, tail_v = clique_split(v, end_g - end_mg, graph)
            result.record(tail_mv == tail_v, g=g, v=v, check="end-clique")
            result.record(len(head_mv) == len(head_v) + shift, g=g, v=v, check="head-length")
            end_v = right_descents(v, graph)
            end_uv = right_descents(multiply(u_doubleprime, v, graph), graph)
            own = clique_split(v, end_v - end_uv, graph)[1]
            result.record(own == clique_split(v, end_g - end_ug, graph)[1], g=g, v=v, check="end-set")
    return result


def exclusion_scan(graph: CoxeterGraph, N: int, creator_radius: int = 1) -> CheckResult:
    result = CheckResult("exclusion", {"N": N, "creator_radius": creator_radius})
    for x in enumerate_ball(graph, N):
        for u_prime, u_doubleprime in _shift_pairs(x, graph, creator_radius):
            result.merge(exclusion_check(x, u_prime, u_doubleprime, graph))
    return result
