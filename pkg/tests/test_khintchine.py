import sys
import os
import math
import logging

# Add project root to path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from modules.coxeter import PreconditionError
from modules.khintchine import (
    FREE3,
    RST,
    column_row_check,
    crossover,
    crossover_report,
    crossover_sides,
    dense_norm,
    diagonal_condition,
    diagonal_family,
    free_agreement,
    intertwiner_check,
    jd_free,
    jd_general,
    rst_constant,
    structured_norm_bound,
    summand_count,
    uniqueness_check,
    verify_factorization,
)
from tests.sample_graphs import free, rs_edge, rst, word

# Configure logging
logging.basicConfig(level=logging.INFO)


def test_free_decomposition():
    print("[TEST] Free decomposition...")
    g = free(3)
    components = jd_free(["a", "b", "c"], g)
    assert len(components) == 4 + 3 * 3
    assert sum(1 for c in components if c.admissible) == 4 + 3
    assert free_agreement(["a", "b", "a"], g)
    assert verify_factorization(["a", "b", "a"], g, 3).passed
    for letters, graph in ((["a", "a"], g), (["r", "s"], rs_edge())):
        try:
            jd_free(letters, graph)
        except PreconditionError:
            continue
        assert False, f"jd_free accepted {letters} on {graph}"
    print("[PASS] Free decomposition verified.")


def test_general_decomposition():
    print("[TEST] General decomposition...")
    g = rs_edge()
    letters = ["t", "r", "s"]
    components = jd_general(letters, g)
    assert len(components) == summand_count(g, 3)
    assert any(c.admissible for c in components)
    assert verify_factorization(letters, g, 3).passed
    assert uniqueness_check(word(g, "t r s"), g).passed
    assert uniqueness_check(word(rst(), "r t s"), rst()).passed
    try:
        jd_general(["t", "t"], g)
    except PreconditionError:
        pass
    else:
        assert False, "non-reduced word accepted"
    print("[PASS] General decomposition verified.")


def test_intertwiners():
    print("[TEST] Intertwining with the free group...")
    g = rs_edge()
    for letters in (["t", "r", "s"], ["r", "s"], ["s", "t"]):
        for component in jd_general(letters, g):
            if component.admissible:
                assert intertwiner_check(component, g, 2).passed, component.describe()
    print("[PASS] Intertwiners verified.")


def test_diagonal_families():
    print("[TEST] Diagonal families...")
    for d in range(1, 8):
        family = diagonal_family(free(3), d, FREE3)
        assert len(family) == 2 ** (d - 1)
        assert diagonal_condition(family)
    for d in (1, 3, 5, 7):
        family = diagonal_family(rst(), d, RST)
        assert len(family) == 2 ** ((d - 1) // 2)
        assert diagonal_condition(family)
        assert family.to_dict()["size"] == len(family)
    for args in ((rst(), 2, RST), (rst(), 3, FREE3), (free(3), 0, FREE3), (free(3), 3, "square")):
        try:
            diagonal_family(*args)
        except PreconditionError:
            continue
        assert False, f"diagonal_family accepted {args[1:]}"
    print("[PASS] Diagonal families verified.")


def test_crossover():
    print("[TEST] Crossover block lengths...")
    assert rst_constant() == 25
    assert crossover(0.0, 3) == 15
    assert crossover(0.0, 3, RST) == 79

    lhs, rhs = crossover_sides(14, 0.0, 3, FREE3)
    assert lhs <= rhs
    lhs, rhs = crossover_sides(15, 0.0, 3, FREE3)
    assert lhs == 16384.0 and rhs == 128.0 * 121

    assert crossover(0.5, 3) >= crossover(0.0, 3)
    assert crossover(0.0, 4) >= crossover(0.0, 3)
    assert crossover_report(0.0, 3)["d_star"] == 15

    for args in ((0.0, 2, FREE3), (-0.1, 3, FREE3), (0.0, 4, RST), (0.0, 3, "square")):
        try:
            crossover(*args)
        except PreconditionError:
            continue
        assert False, f"crossover accepted {args}"
    print("[PASS] Crossover verified.")


def test_block_norms():
    print("[TEST] Block norm estimates...")
    single = [("r0", "c0", 3.0)]
    assert structured_norm_bound(single) == 3.0
    assert abs(dense_norm(single) - 3.0) < 1e-12

    stacked = [(f"r{i}", "c0", 1.0) for i in range(5)]
    assert abs(structured_norm_bound(stacked) - math.sqrt(5)) < 1e-12
    assert abs(dense_norm(stacked) - math.sqrt(5)) < 1e-12

    try:
        structured_norm_bound([("r0", "c0", 1.0), ("r0", "c1", 1.0)])
    except PreconditionError:
        pass
    else:
        assert False, "row meeting two column groups accepted"

    assert column_row_check({"a": 1.0, "b": 2.0, "c": -0.5}, 3)
    assert column_row_check({"a": 1.0, "b": 1.0}, 2)
    print("[PASS] Block norms verified.")


if __name__ == "__main__":
    test_free_decomposition()
    test_general_decomposition()
    test_intertwiners()
    test_diagonal_families()
    test_crossover()
    test_block_norms()
