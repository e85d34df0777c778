import sys
import os
import itertools
import logging
from unittest import mock

# Add project root to path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from modules.coxeter import (
    IDENTITY,
    CoxeterError,
    CoxeterGraph,
    NotACliqueError,
    PreconditionError,
    ResourceLimitError,
    UnknownGeneratorError,
    Word,
    clique_split,
    commuting_pairs,
    enumerate_ball,
    enumerate_cliques,
    find_induced_square,
    find_separating_vertex,
    interval_plus,
    interval_set,
    inverse,
    is_hyperbolic,
    is_prefix,
    is_suffix,
    is_reduced_system,
    lambda_clique,
    left_descents,
    multiply,
    parse_word,
    prefixes,
    reduce,
    require_clique,
    right_descents,
    sphere,
)
from modules import config as settings_module
from tests.sample_graphs import free, k23, klein, rs_edge, rst, small_graphs, square, triangle, word

# Configure logging
logging.basicConfig(level=logging.INFO)


def test_reduce_normal_form():
    print("[TEST] Normal forms...")
    g = rs_edge()
    assert reduce(["s", "r"], g) == Word(("r", "s"))
    assert reduce(["r", "s", "r"], g) == Word(("s",))
    assert reduce(["t", "t"], g) == IDENTITY
    assert len(reduce(["s", "t", "s"], g)) == 3

    f = free(2)
    assert reduce(["a", "a"], f) == IDENTITY
    assert reduce(["a", "b", "b", "a"], f) == IDENTITY
    print("[PASS] Normal forms verified.")


def test_commuting_swaps_share_normal_form():
    print("[TEST] Swapping commuting letters keeps the normal form...")
    for g in (rs_edge(), rst(), square(), k23()):
        for w in enumerate_ball(g, 3):
            letters = list(w.letters)
            for i in range(len(letters) - 1):
                x, y = letters[i], letters[i + 1]
                if x != y and g.commutes(x, y):
                    swapped = letters[:i] + [y, x] + letters[i + 2:]
                    assert reduce(swapped, g) == w, (g, w, swapped)
        # every ordering of a clique reduces to one word
        for clique in enumerate_cliques(g):
            orderings = {reduce(list(order), g) for order in itertools.permutations(sorted(clique))}
            assert len(orderings) == 1
    print("[PASS] Commuting swaps verified.")


def test_unknown_generator():
    print("[TEST] Unknown generators are rejected...")
    try:
        reduce(["x"], free(2))
    except UnknownGeneratorError:
        print("[PASS] UnknownGeneratorError raised.")
    else:
        assert False, "reduce accepted an unknown letter"


def test_graph_validation():
    print("[TEST] Graph validation...")
    for bad in (lambda: CoxeterGraph.build(["a", "a"]), lambda: CoxeterGraph.build(["a", "b"], [("a", "a")])):
        try:
            bad()
        except CoxeterError:
            continue
        assert False, "invalid graph accepted"
    try:
        CoxeterGraph.build(["a"], [("a", "z")])
    except UnknownGeneratorError:
        pass
    else:
        assert False, "edge with unknown endpoint accepted"

    g = rst()
    assert CoxeterGraph.from_dict(g.to_dict()) == g
    print("[PASS] Graph validation verified.")


def test_multiply_is_associative():
    print("[TEST] Associativity on B_2...")
    for g in (rs_edge(), free(3), triangle()):
        ball = enumerate_ball(g, 2)
        for x in ball:
            for y in ball:
                for z in ball:
                    assert multiply(multiply(x, y, g), z, g) == multiply(x, multiply(y, z, g), g)
                assert multiply(x, inverse(x, g), g) == IDENTITY
    print("[PASS] Associativity verified.")


def test_prefix_order_and_descents():
    print("[TEST] Prefix order...")
    g = rs_edge()
    rs = word(g, "r s")
    assert is_prefix(word(g, "r"), rs, g)
    assert is_prefix(word(g, "s"), rs, g)
    assert not is_prefix(word(g, "t"), rs, g)
    assert is_prefix(IDENTITY, rs, g)
    assert left_descents(rs, g) == frozenset({"r", "s"})
    assert right_descents(word(g, "r s t"), g) == frozenset({"t"})
    assert prefixes(rs, g) == frozenset({IDENTITY, word(g, "r"), word(g, "s"), rs})

    f = free(2)
    aba = word(f, "a b a")
    assert prefixes(aba, f) == frozenset({IDENTITY, word(f, "a"), word(f, "a b"), aba})
    assert is_suffix(word(f, "b a"), aba, f)
    assert not is_suffix(word(f, "a b"), aba, f)
    print("[PASS] Prefix order verified.")


def test_clique_split():
    print("[TEST] Clique split...")
    g = rs_edge()
    v = word(g, "r s t")
    head, tail = clique_split(v, frozenset(), g)
    assert head == word(g, "r s") and tail == frozenset({"t"})
    head, tail = clique_split(v, frozenset({"t"}), g)
    assert head == v and tail == frozenset()

    head, tail = clique_split(word(g, "t r s"), frozenset({"r"}), g)
    assert head == word(g, "t r") and tail == frozenset({"s"})
    print("[PASS] Clique split verified.")


def test_intervals():
    print("[TEST] Interval sets...")
    g = rs_edge()
    rs = word(g, "r s")
    assert lambda_clique(IDENTITY, rs, g) == frozenset({"r", "s"})
    assert interval_set(IDENTITY, rs, g) == {IDENTITY, word(g, "r"), word(g, "s"), rs}
    assert interval_set(rs, rs, g) == {rs}
    try:
        lambda_clique(word(g, "t"), rs, g)
    except PreconditionError:
        pass
    else:
        assert False, "non-prefix accepted"

    # C(t, +): t times a clique avoiding t
    plus = interval_plus(word(g, "t"), g)
    assert plus == {word(g, "t"), word(g, "t r"), word(g, "t s"), word(g, "t r s")}
    print("[PASS] Interval sets verified.")


def test_cliques():
    print("[TEST] Clique enumeration...")
    g = rs_edge()
    assert enumerate_cliques(g) == frozenset(
        {frozenset(), frozenset({"r"}), frozenset({"s"}), frozenset({"t"}), frozenset({"r", "s"})}
    )
    assert len(enumerate_cliques(triangle())) == 8
    assert len(enumerate_cliques(free(3))) == 4
    try:
        require_clique({"r", "t"}, g)
    except NotACliqueError:
        pass
    else:
        assert False, "non-clique accepted"

    # Comm of the empty clique on the rst graph
    assert len(commuting_pairs(frozenset(), rst())) == 17
    print("[PASS] Clique enumeration verified.")


def test_ball_sizes():
    print("[TEST] Ball sizes...")
    assert len(enumerate_ball(free(3), 2)) == 10
    assert len(enumerate_ball(free(2), 4)) == 9
    assert len(enumerate_ball(klein(), 5)) == 4
    assert len(enumerate_ball(triangle(), 3)) == 8
    assert len(sphere(free(3), 3)) == 12
    ball = enumerate_ball(rs_edge(), 3)
    assert len(ball) == len(set(ball))
    assert [len(w) for w in ball] == sorted(len(w) for w in ball)
    try:
        enumerate_ball(free(3), 4, cap=20)
    except ResourceLimitError:
        pass
    else:
        assert False, "cap ignored"
    print("[PASS] Ball sizes verified.")


def test_ball_cap_is_read_once():
    print("[TEST] Ball cap comes from cached settings...")
    with mock.patch.object(settings_module, "load_settings", wraps=settings_module.load_settings) as loader:
        settings_module.reload_settings()
        for _ in range(5):
            enumerate_ball(free(3), 2)
        assert loader.call_count == 1

    with mock.patch.dict(os.environ, {"HECKE_MAX_BALL": "5"}):
        settings_module.reload_settings()
        assert settings_module.get_ball_cap() == 5
        try:
            enumerate_ball(free(3), 2)
        except ResourceLimitError:
            pass
        else:
            assert False, "HECKE_MAX_BALL ignored"
    settings_module.reload_settings()
    assert len(enumerate_ball(free(3), 2)) == 10
    print("[PASS] Ball cap verified.")


def test_parse_word():
    print("[TEST] Word syntax...")
    g = rst()
    assert parse_word("[t r s]", g) == Word(("r", "t", "s"))
    assert parse_word("e", g) == IDENTITY
    assert parse_word("[e]", g) == IDENTITY
    assert parse_word("[s, s]", g) == IDENTITY
    print("[PASS] Word syntax verified.")


def test_graph_predicates():
    print("[TEST] Graph predicates...")
    assert is_reduced_system(free(3))
    assert is_reduced_system(rst())
    assert not is_reduced_system(klein())
    assert not is_reduced_system(triangle())
    assert not is_reduced_system(k23())

    assert is_hyperbolic(rst())
    assert not is_hyperbolic(square())
    assert not is_hyperbolic(k23())
    assert find_induced_square(free(3)) is None

    assert find_separating_vertex(rst()) == "s"
    try:
        find_separating_vertex(k23())
    except PreconditionError:
        pass
    else:
        assert False, "separating vertex reported for a non-reduced graph"
    print("[PASS] Graph predicates verified.")


def test_free_version_and_subgraph():
    print("[TEST] Derived graphs...")
    g = rs_edge()
    assert g.free_version().is_free()
    assert g.free_version().generators == g.generators
    sub = g.subgraph(["r", "s"])
    assert sub.generators == ("r", "s") and sub.commutes("r", "s")
    for graph in small_graphs():
        assert graph.link_of([]) == frozenset(graph.generators)
    print("[PASS] Derived graphs verified.")


if __name__ == "__main__":
    test_reduce_normal_form()
    test_commuting_swaps_share_normal_form()
    test_unknown_generator()
    test_graph_validation()
    test_multiply_is_associative()
    test_prefix_order_and_descents()
    test_clique_split()
    test_intervals()
    test_cliques()
    test_ball_sizes()
    test_ball_cap_is_read_once()
    test_parse_word()
    test_graph_predicates()
    test_free_version_and_subgraph()
