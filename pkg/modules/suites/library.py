"""
Suite bodies. Each takes (graph, config) and returns a list of CheckResult;
the executor turns them into status dicts.
"""
import math
from typing import List

import numpy as np

from modules.config import RunConfig
from modules.coxeter import (
    CoxeterError,
    CoxeterGraph,
    PreconditionError,
    enumerate_ball,
    inverse,
    reduce,
    sphere,
)
from modules.growth import count_by_length, growth_rate, kappa_bound_check, kappa_count, kappa_oracle, subsystem_monotonicity_check
from modules.hecke import (
    ONE,
    P,
    ZERO,
    HeckeElement,
    adjoint,
    apply_terms,
    graph_product_factors,
    hecke_multiply,
    inner_product,
    matrix_entries,
    t_expansion,
    universal_property_check,
)
from modules.khintchine import (
    FREE3,
    RST,
    VARIANTS,
    column_row_check,
    crossover,
    crossover_sides,
    diagonal_condition,
    diagonal_family,
    intertwiner_check,
    jd_general,
    uniqueness_check,
    verify_factorization,
)
from modules.multipliers import (
    aux_sum_scan,
    beta_reindex_check,
    ccap_convergence_demo,
    cutdown_identity_check,
    default_schedule,
    delta_identity_check,
    exclusion_scan,
    kraus_check,
    operator_norm_lower,
    pairing_table_check,
    upol_scan,
)
from modules.utils import CheckResult

GROWTH_TERMS = 10
MAX_WORD = 3
MAX_FAMILY_D = 7


def hecke_relations(graph: CoxeterGraph, config: RunConfig) -> List[CheckResult]:
    result = CheckResult("hecke-relations", {"generators": graph.generators})
    unit = HeckeElement.unit(graph)
    basis = {s: HeckeElement.basis(reduce((s,), graph), graph) for s in graph.generators}
    for s, ts in basis.items():
        square = ts * ts
        result.record(square == unit + ts.scale(P), relation=f"T_{s}^2", got=str(square))
        for t, tt in basis.items():
            if s == t:
                continue
            product = ts * tt
            expected = HeckeElement.basis(reduce((s, t), graph), graph)
            result.record(product == expected, relation=f"T_{s} T_{t}", got=str(product))
            if graph.commutes(s, t):
                result.record(product == tt * ts, relation=f"T_{s} T_{t} = T_{t} T_{s}")

    factors = CheckResult("graph-product-factors", {})
    for s, ((a, b), (c, d)) in graph_product_factors(graph).items():
        square = ((a * a + b * c, a * b + b * d), (c * a + d * c, c * b + d * d))
        expected = ((ONE, P), (P, ONE + P * P))
        factors.record(square == expected, generator=s)

    pairing = CheckResult("trace-pairing", {"N": min(config.ball_radius, 2)})
    words = enumerate_ball(graph, min(config.ball_radius, 2))
    bad = set(universal_property_check(graph, words))
    for w in words:
        for w2 in words:
            pairing.record((w, w2) not in bad, w=w, w_prime=w2)
    return [result, factors, pairing]


def orthonormality(graph: CoxeterGraph, config: RunConfig) -> List[CheckResult]:
    N = config.ball_radius
    result = CheckResult("orthonormality", {"N": N})
    ball = enumerate_ball(graph, N)
    vectors = [HeckeElement.basis(w, graph) for w in ball]
    for i, a in enumerate(vectors):
        for j, b in enumerate(vectors):
            value = inner_product(a, b)
            result.record(value == (ONE if i == j else ZERO), w=ball[i], v=ball[j], value=value)

    adjoints = CheckResult("adjoint", {"N": N})
    for w, a in zip(ball, vectors):
        adjoints.record(adjoint(a) == HeckeElement.basis(inverse(w, graph), graph), w=w)
    return [result, adjoints]


def expansion(graph: CoxeterGraph, config: RunConfig) -> List[CheckResult]:
    N = config.ball_radius
    result = CheckResult("expansion", {"N": N})
    ball = enumerate_ball(graph, N)
    for w in ball:
        terms = t_expansion(w, graph)
        tw = HeckeElement.basis(w, graph)
        for x in ball:
            tx = HeckeElement.basis(x, graph)
            got = apply_terms(terms, tx, graph)
            want = hecke_multiply(tw, tx, graph)
            result.record(got == want, w=w, x=x, got=str(got), want=str(want))
    return [result]


def breakdown(graph: CoxeterGraph, config: RunConfig) -> List[CheckResult]:
    N = config.ball_radius
    result = CheckResult("breakdown", {"N": N})
    targets = enumerate_ball(graph, N + 1)
    for w in enumerate_ball(graph, N):
        plain = t_expansion(w, graph)
        broken = t_expansion(w, graph, broken_down=True)
        for x in targets:
            got = matrix_entries(broken, x, graph)
            want = matrix_entries(plain, x, graph)
            result.record(got == want, w=w, x=x)
    return [result]


def qw_identity(graph: CoxeterGraph, config: RunConfig) -> List[CheckResult]:
    N = config.ball_radius
    result = CheckResult("qw-identity", {"N": N})
    for w in enumerate_ball(graph, min(N, MAX_WORD)):
        result.merge(delta_identity_check(w, graph, N))
    return [result, pairing_table_check(graph)]


def aux_sum(graph: CoxeterGraph, config: RunConfig) -> List[CheckResult]:
    N = config.ball_radius
    return [aux_sum_scan(graph, N), beta_reindex_check(graph, N), exclusion_scan(graph, N)]


def cutdown(graph: CoxeterGraph, config: RunConfig) -> List[CheckResult]:
    N = config.ball_radius
    checks = [cutdown_identity_check(n, graph, N, config.q, tol=config.tol) for n in range(0, min(2, N - 1) + 1)]

    dilations = CheckResult("dilation-bound", {"N": min(N, MAX_WORD)})
    for row in upol_scan(graph, min(N, MAX_WORD), range(0, 2 * N + 2)):
        dilations.record(row["norm"] <= row["triangle_bound"] + config.tol, **row)
    return checks + [dilations]


def _reduced_words(graph: CoxeterGraph, max_length: int):
    for d in range(1, max_length + 1):
        yield from sphere(graph, d)


def factorization(graph: CoxeterGraph, config: RunConfig) -> List[CheckResult]:
    N = config.ball_radius
    result = CheckResult("factorization", {"N": N, "max_word": MAX_WORD})
    unique = CheckResult("uniqueness", {"max_word": MAX_WORD})
    for w in _reduced_words(graph, MAX_WORD):
        result.merge(verify_factorization(w.letters, graph, N))
        unique.merge(uniqueness_check(w, graph))
    return [result, unique]


def intertwiner(graph: CoxeterGraph, config: RunConfig) -> List[CheckResult]:
    N = config.ball_radius
    result = CheckResult("intertwiner", {"N": N, "max_word": MAX_WORD})
    for w in _reduced_words(graph, MAX_WORD):
        for component in jd_general(w.letters, graph):
            if component.admissible:
                result.merge(intertwiner_check(component, graph, N))
    return [result]


def kappa(graph: CoxeterGraph, config: RunConfig) -> List[CheckResult]:
    N = config.ball_radius
    report = kappa_bound_check(graph, N + 2)
    bound = CheckResult("kappa-bound", report.to_dict())
    bound.record(math.isfinite(report.C), C=report.C)

    counts = CheckResult("kappa-count", {"N": N})
    for x in enumerate_ball(graph, N):
        for a in range(len(x) + 1):
            got, want = kappa_count(x, a, graph), kappa_oracle(x, a, graph)
            counts.record(got == want, x=x, a=a, got=got, want=want)
    return [bound, counts]


def growth(graph: CoxeterGraph, config: RunConfig) -> List[CheckResult]:
    counts = CheckResult("growth-counts", {"K": GROWTH_TERMS})
    try:
        series = count_by_length(graph, GROWTH_TERMS, method="both")
        counts.record(series[0] == 1, counts=series)
    except CoxeterError as e:
        counts.record(False, error=str(e))

    rate = CheckResult("growth-rate", {"tol": config.tol})
    rho = growth_rate(graph, config.tol)
    rate.record(rho > 0 and (math.isinf(rho) or rho <= 1 + config.tol), rho=rho)

    monotone = CheckResult("subsystem-monotonicity", {"K": GROWTH_TERMS})
    for s in graph.generators:
        subset = [t for t in graph.generators if t != s]
        if not subset:
            continue
        bad = subsystem_monotonicity_check(graph, subset, GROWTH_TERMS)
        monotone.record(not bad, removed=s, lengths=bad)
    return [counts, rate, monotone]


def kraus(graph: CoxeterGraph, config: RunConfig) -> List[CheckResult]:
    result = CheckResult("kraus", {"points": 99, "q": [1.0, 2.0]})
    for q in (1.0, 2.0):
        for r in np.linspace(0, 1, 101)[1:-1]:
            result.record(kraus_check(float(r), q), r=float(r), q=q)
    return [result]


def diagonal(graph: CoxeterGraph, config: RunConfig) -> List[CheckResult]:
    families = CheckResult("diagonal-families", {"max_d": MAX_FAMILY_D})
    for variant in VARIANTS:
        step = 2 if variant == RST else 1
        for d in range(1, MAX_FAMILY_D + 1, step):
            try:
                family = diagonal_family(graph, d, variant)
            except PreconditionError:
                break
            size = 2 ** (d - 1) if variant == FREE3 else 2 ** ((d - 1) // 2)
            families.record(len(family) == size and diagonal_condition(family), variant=variant, d=d, size=len(family))

    certificate = CheckResult("crossover", {"p": 0.0, "S_count": 3})
    for variant in VARIANTS:
        d_star = crossover(0.0, 3, variant)
        step = 2 if variant == RST else 1
        for d in range(1, d_star, step):
            lhs, rhs = crossover_sides(d, 0.0, 3, variant)
            certificate.record(lhs <= rhs, variant=variant, d=d, lhs=lhs, rhs=rhs)
        lhs, rhs = crossover_sides(d_star, 0.0, 3, variant)
        certificate.record(lhs > rhs, variant=variant, d=d_star, lhs=lhs, rhs=rhs)
    return [families, certificate]


def norm(graph: CoxeterGraph, config: RunConfig) -> List[CheckResult]:
    result = CheckResult("generator-norm", {"N": 2})
    for s in graph.generators:
        terms = t_expansion(reduce((s,), graph), graph)
        for q in (0.25, 1.0, 4.0):
            got = operator_norm_lower(terms, graph, 2, q, config.tol)
            want = max(math.sqrt(q), 1 / math.sqrt(q))
            result.record(abs(got - want) <= 1e-9, s=s, q=q, got=got, want=want)

    letters = graph.generators[:4]
    N = min(config.ball_radius, 3)
    columns = CheckResult("column-row", {"letters": letters, "N": N})
    coeffs = {s: float(i + 1) for i, s in enumerate(letters)}
    columns.record(column_row_check(coeffs, N, config.tol), coeffs=coeffs)
    return [result, columns]


def ccap(graph: CoxeterGraph, config: RunConfig) -> List[CheckResult]:
    radius = min(max(config.ball_radius, 1), 3)
    a = HeckeElement(graph, {w: ONE for w in enumerate_ball(graph, radius)})
    gaps = ccap_convergence_demo(graph, a, default_schedule(10), config.q)
    result = CheckResult("ccap", {"radius": radius, "q": config.q})
    for k in range(1, len(gaps)):
        result.record(gaps[k] < gaps[k - 1], k=k + 1, gap=gaps[k], previous=gaps[k - 1])
    result.record(gaps[-1] < 0.1 * gaps[0], first=gaps[0], last=gaps[-1])
    return [result]
