"""
Right-angled Coxeter systems: graphs, normal forms, cliques and balls.
"""
from .errors import (
    CoxeterError,
    UnknownGeneratorError,
    GraphMismatchError,
    NotACliqueError,
    PreconditionError,
    ResourceLimitError,
    ConvergenceError,
)
from .graph import CoxeterGraph
from .words import (
    IDENTITY,
    Word,
    reduce,
    multiply,
    inverse,
    is_prefix,
    is_suffix,
    left_descents,
    right_descents,
    prefixes,
    suffixes,
    parse_word,
    format_word,
)
from .cliques import (
    Clique,
    EMPTY_CLIQUE,
    clique_split,
    clique_word,
    cliques_by_size,
    commuting_pairs,
    enumerate_cliques,
    interval_plus,
    interval_set,
    lambda_clique,
    require_clique,
    subcliques,
)
from .ball import enumerate_ball, sphere
from .predicates import is_reduced_system, is_hyperbolic, find_separating_vertex, find_induced_square
