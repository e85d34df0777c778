"""
Small commutation graphs shared by the test scripts, built in code so tests do
not depend on data/graphs.
"""
from modules.coxeter import CoxeterGraph, reduce


def free(n=3):
    return CoxeterGraph.build("abcd"[:n] if n <= 4 else [f"s{i}" for i in range(n)], [])


def rst():
    """r - t edge, s adjacent to neither."""
    return CoxeterGraph.build(["r", "s", "t"], [("r", "t")])


def rs_edge():
    return CoxeterGraph.build(["r", "s", "t"], [("r", "s")])


def klein():
    return CoxeterGraph.build(["a", "b"], [("a", "b")])


def triangle():
    return CoxeterGraph.build(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])


def square():
    return CoxeterGraph.build(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])


def path4():
    return CoxeterGraph.build(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d")])


def k23():
    left, right = ["a1", "a2"], ["b1", "b2", "b3"]
    return CoxeterGraph.build(left + right, [(a, b) for a in left for b in right])


def small_graphs():
    """Graphs on at most four generators used by the exhaustive checks."""
    return [free(2), free(3), rst(), rs_edge(), klein(), triangle(), path4()]


def word(graph, text):
    return reduce(text.split(), graph) if text.strip() else reduce((), graph)
