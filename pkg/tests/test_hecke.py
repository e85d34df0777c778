import sys
import os
import logging

# Add project root to path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from modules.coxeter import IDENTITY, GraphMismatchError, PreconditionError, enumerate_ball
from modules.hecke import (
    ONE,
    P,
    ZERO,
    ExpansionTriple,
    HeckeElement,
    PolyScalar,
    adjoint,
    apply_terms,
    breakdown,
    conditional_expectation,
    enumerate_Aw,
    format_element,
    group_action,
    hecke_multiply,
    inner_product,
    matrix_entries,
    p_value,
    parse_element,
    project_prefix,
    t_expansion,
    trace,
    universal_property_check,
)
from tests.sample_graphs import free, rs_edge, rst, small_graphs, triangle, word

# Configure logging
logging.basicConfig(level=logging.INFO)


def basis(graph, text):
    return HeckeElement.basis(word(graph, text), graph)


def test_poly_scalar():
    print("[TEST] PolyScalar arithmetic...")
    assert P * P == PolyScalar.monomial(2)
    assert (ONE + P) * (ONE - P) == ONE - P ** 2
    assert ZERO + ONE == ONE and not ZERO
    x = PolyScalar.parse("1 + -2 p + 1/3 p^2")
    assert PolyScalar.parse(str(x)) == x
    assert str(ONE + P) == "1 + p"
    assert abs(p_value(4.0) - 1.5) < 1e-15
    assert abs((ONE + P).evaluate(4.0) - 2.5) < 1e-15
    assert P.evaluate(1.0) == 0.0
    print("[PASS] PolyScalar arithmetic verified.")


def test_quadratic_relation():
    print("[TEST] T_s^2 = 1 + p T_s on every generator...")
    for g in small_graphs():
        for s in g.generators:
            ts = basis(g, s)
            assert ts * ts == HeckeElement.unit(g) + ts.scale(P)
    g = free(2)
    assert format_element(basis(g, "a") * basis(g, "a")) == "1 + p [a]"
    print("[PASS] Quadratic relation verified.")


def test_edge_commutation():
    print("[TEST] Commuting generators...")
    g = rs_edge()
    assert basis(g, "r") * basis(g, "s") == basis(g, "s") * basis(g, "r") == basis(g, "r s")
    assert basis(g, "s") * basis(g, "t") != basis(g, "t") * basis(g, "s")
    print("[PASS] Edge commutation verified.")


def test_parse_and_format():
    print("[TEST] Element syntax...")
    g = free(2)
    a = parse_element("1 + p [a]", g)
    assert a == HeckeElement.unit(g) + basis(g, "a").scale(P)
    assert str(a) == "1 + p [a]"
    assert parse_element("2 * [a b]", g) == basis(g, "a b").scale(2)
    assert parse_element("(1 + p) [b]", g) == basis(g, "b").scale(ONE + P)
    assert str(HeckeElement.zero(g)) == "0"
    print("[PASS] Element syntax verified.")


def test_orthonormal_basis():
    print("[TEST] Orthonormality on B_2...")
    for g in (free(3), rs_edge(), triangle()):
        ball = enumerate_ball(g, 2)
        for w in ball:
            for v in ball:
                value = inner_product(HeckeElement.basis(w, g), HeckeElement.basis(v, g))
                assert value == (ONE if w == v else ZERO)
        assert universal_property_check(g, ball) == []
    print("[PASS] Orthonormality verified.")


def test_adjoint_and_trace():
    print("[TEST] Adjoint and trace...")
    g = free(2)
    assert adjoint(basis(g, "a b")) == basis(g, "b a")
    assert trace(basis(g, "a") * basis(g, "a")) == ONE
    assert trace(basis(g, "a b")) == ZERO
    x = basis(g, "a") + basis(g, "a b").scale(P)
    assert adjoint(adjoint(x)) == x
    print("[PASS] Adjoint and trace verified.")


def test_group_action_and_projection():
    print("[TEST] Group action and prefix projections...")
    g = free(2)
    x = basis(g, "a") + basis(g, "b")
    assert group_action(word(g, "a"), x, g) == HeckeElement.unit(g) + basis(g, "a b")
    assert project_prefix(word(g, "a"), x, g) == basis(g, "a")
    assert project_prefix(IDENTITY, x, g) == x
    print("[PASS] Group action verified.")


def test_conditional_expectation():
    print("[TEST] Conditional expectation...")
    g = rs_edge()
    x = basis(g, "r") + basis(g, "t") + basis(g, "r t")
    assert conditional_expectation({"r"}, x, g) == basis(g, "r")
    assert conditional_expectation({"r", "t"}, x, g) == x
    print("[PASS] Conditional expectation verified.")


def sample_elements(graph, radius=2):
    ball = enumerate_ball(graph, radius)
    samples = [HeckeElement.basis(w, graph) for w in ball]
    # a few mixed elements with p-dependent coefficients
    for i in range(0, len(ball) - 2, 3):
        x, y, z = ball[i], ball[i + 1], ball[i + 2]
        samples.append(
            HeckeElement.basis(x, graph)
            + HeckeElement.basis(y, graph).scale(P)
            - HeckeElement.basis(z, graph).scale(ONE + P)
        )
    return samples


def test_adjoint_reverses_products():
    print("[TEST] (xy)* = y* x* and tau(xy) = tau(yx) on samples...")
    for g in (free(2), rs_edge(), rst()):
        samples = sample_elements(g)
        for x in samples:
            for y in samples:
                xy = hecke_multiply(x, y, g)
                yx = hecke_multiply(y, x, g)
                assert adjoint(xy) == hecke_multiply(adjoint(y), adjoint(x), g), (x, y)
                assert trace(xy) == trace(yx), (x, y)
    print("[PASS] Adjoint and trace identities verified.")


def test_expectation_bimodule_property():
    print("[TEST] E(x a y) = x E(a) y and tau(E(a)) = tau(a)...")
    g = rst()
    subset = {"r", "t"}
    inner = [x for x in sample_elements(g) if set().union(*(w.letters for w in x.support())) <= subset]
    assert len(inner) >= 4
    for a in sample_elements(g):
        expected = conditional_expectation(subset, a, g)
        assert trace(expected) == trace(a)
        for x in inner:
            for y in inner:
                lhs = conditional_expectation(subset, hecke_multiply(hecke_multiply(x, a, g), y, g), g)
                rhs = hecke_multiply(hecke_multiply(x, expected, g), y, g)
                assert lhs == rhs, (x, a, y)
    print("[PASS] Expectation verified.")


def test_graph_mismatch():
    print("[TEST] Mixing graphs is rejected...")
    try:
        basis(free(2), "a") + basis(free(3), "a")
    except GraphMismatchError:
        print("[PASS] GraphMismatchError raised.")
    else:
        assert False, "elements over different graphs combined"


def test_generator_expansion():
    print("[TEST] T_s = T1_s + p P_s...")
    g = free(2)
    terms = t_expansion(word(g, "a"), g)
    assert sorted(t.describe() for t in terms) == ["T1[a]", "p P[a]"]
    print("[PASS] Generator expansion verified.")


def test_expansion_triples():
    print("[TEST] Expansion triples of [r s] with r - s an edge...")
    g = rs_edge()
    triples = enumerate_Aw(word(g, "r s"), g)
    assert len(triples) == 4
    assert all(t.word(g) == word(g, "r s") for t in triples)
    assert {len(t.clique) for t in triples} == {0, 1, 2}
    print("[PASS] Expansion triples verified.")


def test_expansion_matches_multiplication():
    print("[TEST] Expansion against exact products on B_3...")
    for g in (free(2), rs_edge(), rst(), triangle()):
        ball = enumerate_ball(g, 3)
        for w in ball:
            terms = t_expansion(w, g)
            tw = HeckeElement.basis(w, g)
            for x in ball:
                tx = HeckeElement.basis(x, g)
                assert apply_terms(terms, tx, g) == hecke_multiply(tw, tx, g), (w, x)
    print("[PASS] Expansion verified.")


def test_breakdown():
    print("[TEST] Breakdown of ([a], {b}, [a]) on the free group...")
    g = free(2)
    a = word(g, "a")
    t = ExpansionTriple(a, frozenset({"b"}), a)
    assert t.word(g) == word(g, "a b a")
    assert breakdown(t, g) == (a, IDENTITY, IDENTITY)

    bad = ExpansionTriple(word(g, "b"), frozenset({"b"}), IDENTITY)
    try:
        breakdown(bad, g)
    except PreconditionError:
        pass
    else:
        assert False, "invalid triple accepted"

    for graph in (free(2), rs_edge()):
        for w in enumerate_ball(graph, 3):
            plain = t_expansion(w, graph)
            broken = t_expansion(w, graph, broken_down=True)
            for x in enumerate_ball(graph, 4):
                assert matrix_entries(plain, x, graph) == matrix_entries(broken, x, graph)
    print("[PASS] Breakdown verified.")


def test_breakdown_on_larger_balls():
    print("[TEST] Breakdown of B_4 expansions tested on B_5...")
    for graph in (free(2), rs_edge()):
        targets = enumerate_ball(graph, 5)
        for w in enumerate_ball(graph, 4):
            plain = t_expansion(w, graph)
            broken = t_expansion(w, graph, broken_down=True)
            for x in targets:
                assert matrix_entries(plain, x, graph) == matrix_entries(broken, x, graph), (w, x)
    print("[PASS] Larger breakdown verified.")


if __name__ == "__main__":
    test_poly_scalar()
    test_quadratic_relation()
    test_edge_commutation()
    test_parse_and_format()
    test_orthonormal_basis()
    test_adjoint_and_trace()
    test_group_action_and_projection()
    test_conditional_expectation()
    test_adjoint_reverses_products()
    test_expectation_bimodule_property()
    test_graph_mismatch()
    test_generator_expansion()
    test_expansion_triples()
    test_expansion_matches_multiplication()
    test_breakdown()
    test_breakdown_on_larger_balls()
