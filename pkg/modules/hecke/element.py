"""
HeckeElement - a finite combination sum c_w T_w with PolyScalar coefficients.
The same value is read as the GNS vector sum c_w T_w Omega.
"""
import math
import re
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from modules.coxeter import (
    CoxeterGraph,
    GraphMismatchError,
    IDENTITY,
    UnknownGeneratorError,
    Word,
    format_word,
    inverse,
    is_prefix,
    left_descents,
    multiply,
    parse_word,
    reduce,
)

from .scalars import ONE, P, ZERO, PolyScalar

_BRACKET = re.compile(r"\[[^\]]*\]")


class HeckeElement:
    __slots__ = ("graph", "_terms")

    def __init__(self, graph: CoxeterGraph, terms: Optional[Mapping[Word, PolyScalar]] = None):
        self.graph = graph
        clean: Dict[Word, PolyScalar] = {}
        for w, c in (terms or {}).items():
            c = c if isinstance(c, PolyScalar) else PolyScalar.constant(c)
            if c:
                clean[w] = c
        self._terms = clean

    @classmethod
    def basis(cls, w: Word, graph: CoxeterGraph) -> "HeckeElement":
        return cls(graph, {w: ONE})

    @classmethod
    def unit(cls, graph: CoxeterGraph) -> "HeckeElement":
        return cls(graph, {IDENTITY: ONE})

    @classmethod
    def zero(cls, graph: CoxeterGraph) -> "HeckeElement":
        return cls(graph)

    @property
    def terms(self) -> Dict[Word, PolyScalar]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Word, PolyScalar]]:
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key(self.graph))

    def coefficient(self, w: Word) -> PolyScalar:
        return self._terms.get(w, ZERO)

    def support(self) -> List[Word]:
        return [w for w, _ in self.items()]

    def is_zero(self) -> bool:
        return not self._terms

    def _same_graph(self, other: "HeckeElement"):
        if self.graph != other.graph:
            raise GraphMismatchError(f"Elements over {self.graph} and {other.graph} cannot be combined")

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self._same_graph(other)
        merged = dict(self._terms)
        for w, c in other._terms.items():
            merged[w] = merged.get(w, ZERO) + c
        return HeckeElement(self.graph, merged)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + other.scale(PolyScalar.constant(-1))

    def scale(self, factor) -> "HeckeElement":
        factor = factor if isinstance(factor, PolyScalar) else PolyScalar.constant(factor)
        return HeckeElement(self.graph, {w: c * factor for w, c in self._terms.items()})

    def __mul__(self, other: "HeckeElement") -> "HeckeElement":
        return hecke_multiply(self, other, self.graph)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElement):
            return False
        return self.graph == other.graph and self._terms == other._terms

    def __hash__(self):
        return hash((self.graph, frozenset(self._terms.items())))

    # Numeric views at a fixed q

    def evaluate(self, q: float) -> Dict[Word, float]:
        return {w: c.evaluate(q) for w, c in self._terms.items()}

    def norm2(self, q: float) -> float:
        """GNS 2-norm; the T_w Omega are orthonormal."""
        return math.sqrt(sum(v * v for v in self.evaluate(q).values()))

    # Text form

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"HeckeElement({self})"


def format_element(a: HeckeElement) -> str:
    """'1 + p [s]': identity terms print as bare scalars, others as 'coef [word]'."""
    if a.is_zero():
        return "0"
    parts = []
    for w, c in a.items():
        coef = str(c) if c.is_monomial() else f"({c})"
        if w == IDENTITY:
            parts.append(coef)
        elif c == ONE:
            parts.append(format_word(w))
        else:
            parts.append(f"{coef} {format_word(w)}")
    return " + ".join(parts)


def _split_top_level(text: str) -> List[str]:
    parts, depth, start, i = [], 0, 0, 0
    while i < len(text):
        ch = text[i]
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif depth == 0 and text.startswith(" + ", i):
            parts.append(text[start:i])
            start = i + 3
            i += 3
            continue
        i += 1
    parts.append(text[start:])
    return parts


def parse_element(text: str, graph: CoxeterGraph) -> HeckeElement:
    """Inverse of format_element; also accepts 'c * [w]'."""
    text = text.strip()
    if text in ("", "0"):
        return HeckeElement.zero(graph)
    terms: Dict[Word, PolyScalar] = {}
    for chunk in _split_top_level(text):
        chunk = chunk.strip()
        match = _BRACKET.search(chunk)
        if match:
            w = parse_word(match.group(0), graph)
            coef_text = chunk[: match.start()].strip().rstrip("*").strip()
            coef = PolyScalar.parse(coef_text) if coef_text else ONE
        else:
            w = IDENTITY
            coef = PolyScalar.parse(chunk)
        terms[w] = terms.get(w, ZERO) + coef
    return HeckeElement(graph, terms)


# Algebra operations


def _left_generator(s: str, terms: Dict[Word, PolyScalar], graph: CoxeterGraph) -> Dict[Word, PolyScalar]:
    # T_s T_v = T_{sv} if |sv| > |v|, else T_{sv} + p T_v
    out: Dict[Word, PolyScalar] = {}
    for v, c in terms.items():
        sv = reduce((s,) + v.letters, graph)
        out[sv] = out.get(sv, ZERO) + c
        if s in left_descents(v, graph):
            out[v] = out.get(v, ZERO) + c * P
    return {w: c for w, c in out.items() if c}


@lru_cache(maxsize=1 << 16)
def _basis_product(w: Word, v: Word, graph: CoxeterGraph) -> Tuple[Tuple[Word, PolyScalar], ...]:
    terms = {v: ONE}
    for s in reversed(w.letters):
        terms = _left_generator(s, terms, graph)
    return tuple(terms.items())


def basis_product(w: Word, v: Word, graph: CoxeterGraph) -> Dict[Word, PolyScalar]:
    """T_w T_v as a coefficient map."""
    return dict(_basis_product(w, v, graph))


def hecke_multiply(a: HeckeElement, b: HeckeElement, graph: CoxeterGraph) -> HeckeElement:
    """
    Exact product in the Hecke algebra, folding the generator rule over the
    normal-form letters of each basis word of a.

    Raises:
        GraphMismatchError: if a, b and graph disagree.
    """
    if a.graph != graph or b.graph != graph:
        raise GraphMismatchError(f"hecke_multiply operands are not over {graph}")
    out: Dict[Word, PolyScalar] = {}
    for w, cw in a._terms.items():
        for v, cv in b._terms.items():
            coef = cw * cv
            for u, cu in _basis_product(w, v, graph):
                out[u] = out.get(u, ZERO) + coef * cu
    return HeckeElement(graph, out)


def adjoint(a: HeckeElement) -> HeckeElement:
    """T_w -> T_{w^-1}; rational coefficients are self-conjugate."""
    return HeckeElement(a.graph, {inverse(w, a.graph): c for w, c in a._terms.items()})


def trace(a: HeckeElement) -> PolyScalar:
    return a.coefficient(IDENTITY)


def inner_product(a: HeckeElement, b: HeckeElement) -> PolyScalar:
    """<a, b> = tau(b* a), computed by pairing coefficients of the orthonormal basis."""
    a._same_graph(b)
    total = ZERO
    for w, c in a._terms.items():
        other = b._terms.get(w)
        if other is not None:
            total = total + c * other
    return total


def group_action(v: Word, a: HeckeElement, graph: CoxeterGraph) -> HeckeElement:
    """T^(1)_v: the basis permutation T_w Omega -> T_{vw} Omega."""
    return HeckeElement(graph, {multiply(v, w, graph): c for w, c in a._terms.items()})


def project_prefix(w: Word, a: HeckeElement, graph: CoxeterGraph) -> HeckeElement:
    """P_w: keeps the terms T_v Omega with w <= v."""
    return HeckeElement(graph, {v: c for v, c in a._terms.items() if is_prefix(w, v, graph)})


def conditional_expectation(subset: Iterable[str], a: HeckeElement, graph: CoxeterGraph) -> HeckeElement:
    """Trace-preserving expectation onto the Hecke algebra of the sub-system on `subset`."""
    keep = set(subset)
    for s in keep:
        if s not in graph:
            raise UnknownGeneratorError(f"Unknown generator '{s}' in sub-system")
    return HeckeElement(graph, {w: c for w, c in a._terms.items() if set(w.letters) <= keep})


def universal_property_check(graph: CoxeterGraph, words: Iterable[Word]) -> List[Tuple[Word, Word]]:
    """
    Returns the pairs (w, w') where the identity coefficient of T_{w'}^* T_w
    differs from the Kronecker delta; empty when the check passes.
    """
    words = list(words)
    failures = []
    for w in words:
        tw = HeckeElement.basis(w, graph)
        for w2 in words:
            value = trace(hecke_multiply(adjoint(HeckeElement.basis(w2, graph)), tw, graph))
            if value != (ONE if w == w2 else ZERO):
                failures.append((w, w2))
    return failures


def graph_product_factors(graph: CoxeterGraph) -> Dict[str, Tuple[Tuple[PolyScalar, PolyScalar], Tuple[PolyScalar, PolyScalar]]]:
    """
    Each generator spans a two-dimensional algebra with basis (1, T_s) in which
    left multiplication by T_s has matrix [[0, 1], [1, p]].
    """
    return {s: ((ZERO, ONE), (ONE, P)) for s in graph.generators}
