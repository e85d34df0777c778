"""
Words in a right-angled Coxeter group.

Every Word is stored in its ShortLex normal form: the lexicographically least
reduced expression, where letters are ordered by their position in the graph's
generator list. Two words are equal as group elements iff they are equal as
Word values.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from .errors import GraphMismatchError, UnknownGeneratorError
from .graph import CoxeterGraph


@dataclass(frozen=True, order=False)
class Word:
    letters: Tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def length(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return " ".join(self.letters) if self.letters else "e"

    def __repr__(self) -> str:
        return f"Word[{self}]"

    def sort_key(self, graph: CoxeterGraph) -> Tuple[int, Tuple[int, ...]]:
        """ShortLex key: (length, generator ranks)."""
        return (len(self.letters), tuple(graph.rank(s) for s in self.letters))


IDENTITY = Word(())


def _check_labels(letters: Iterable[str], graph: CoxeterGraph):
    for s in letters:
        if s not in graph:
            raise UnknownGeneratorError(f"Unknown generator '{s}' for {graph}")


def _cancel(letters: Iterable[str], graph: CoxeterGraph) -> List[str]:
    # Append letter by letter; a new letter cancels the nearest equal letter
    # reachable through commuting letters, otherwise it is appended.
    out: List[str] = []
    for s in letters:
        for i in range(len(out) - 1, -1, -1):
            if out[i] == s:
                del out[i]
                break
            if not graph.commutes(out[i], s):
                out.append(s)
                break
        else:
            out.append(s)
    return out


def _shortlex(reduced: List[str], graph: CoxeterGraph) -> Tuple[str, ...]:
    remaining = list(reduced)
    result = []
    while remaining:
        best = None
        for j, s in enumerate(remaining):
            if best is not None and graph.rank(s) >= graph.rank(remaining[best]):
                continue
            if all(graph.commutes(remaining[i], s) for i in range(j)):
                best = j
        result.append(remaining.pop(best))
    return tuple(result)


@lru_cache(maxsize=1 << 18)
def _reduce_cached(letters: Tuple[str, ...], graph: CoxeterGraph) -> Word:
    return Word(_shortlex(_cancel(letters, graph), graph))


def reduce(letters: Sequence[str], graph: CoxeterGraph) -> Word:
    """
    Returns the canonical reduced representative of a raw generator sequence.

    Raises:
        UnknownGeneratorError: if a letter is not a generator of the graph.
    """
    letters = tuple(letters)
    _check_labels(letters, graph)
    return _reduce_cached(letters, graph)


def multiply(w1: Word, w2: Word, graph: CoxeterGraph) -> Word:
    for w in (w1, w2):
        for s in w.letters:
            if s not in graph:
                raise GraphMismatchError(f"Word [{w}] is not over {graph}")
    if not w1.letters:
        return w2
    if not w2.letters:
        return w1
    return _reduce_cached(w1.letters + w2.letters, graph)


def inverse(w: Word, graph: CoxeterGraph) -> Word:
    return _reduce_cached(tuple(reversed(w.letters)), graph)


def generator(s: str, graph: CoxeterGraph) -> Word:
    return reduce((s,), graph)


def is_prefix(w: Word, x: Word, graph: CoxeterGraph) -> bool:
    """w <= x, i.e. |w^-1 x| = |x| - |w|."""
    if len(w) > len(x):
        return False
    return len(multiply(inverse(w, graph), x, graph)) == len(x) - len(w)


def is_suffix(u: Word, x: Word, graph: CoxeterGraph) -> bool:
    """|x u^-1| = |x| - |u|."""
    if len(u) > len(x):
        return False
    return len(multiply(x, inverse(u, graph), graph)) == len(x) - len(u)


@lru_cache(maxsize=1 << 16)
def left_descents(w: Word, graph: CoxeterGraph) -> FrozenSet[str]:
    """Letters s with |s w| < |w|; in a normal form these are the letters movable to the front."""
    letters = w.letters
    found = set()
    for j, s in enumerate(letters):
        if all(graph.commutes(letters[i], s) for i in range(j)):
            found.add(s)
    return frozenset(found)


@lru_cache(maxsize=1 << 16)
def right_descents(w: Word, graph: CoxeterGraph) -> FrozenSet[str]:
    letters = w.letters
    n = len(letters)
    found = set()
    for j, s in enumerate(letters):
        if all(graph.commutes(letters[i], s) for i in range(j + 1, n)):
            found.add(s)
    return frozenset(found)


@lru_cache(maxsize=1 << 16)
def prefixes(x: Word, graph: CoxeterGraph) -> FrozenSet[Word]:
    """All w with w <= x."""
    result = {IDENTITY}
    for s in left_descents(x, graph):
        head = generator(s, graph)
        rest = multiply(head, x, graph)
        for p in prefixes(rest, graph):
            result.add(multiply(head, p, graph))
    return frozenset(result)


def suffixes(x: Word, graph: CoxeterGraph) -> FrozenSet[Word]:
    return frozenset(inverse(p, graph) for p in prefixes(inverse(x, graph), graph))


def parse_word(text: str, graph: CoxeterGraph) -> Word:
    """Parses '[t r s]', 't r s' or 'e' (brackets optional, commas allowed)."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    tokens = [tok for tok in body.replace(",", " ").split() if tok]
    if tokens == ["e"] or not tokens:
        return IDENTITY
    return reduce(tokens, graph)


def format_word(w: Word) -> str:
    return f"[{w}]"
