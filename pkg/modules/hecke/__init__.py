"""
Exact Hecke algebra arithmetic over a right-angled Coxeter graph and the
GNS-basis operator calculus (group action, prefix projections, expansions).
"""
from .scalars import ONE, P, ZERO, PolyScalar, p_value
from .element import (
    HeckeElement,
    adjoint,
    basis_product,
    conditional_expectation,
    format_element,
    graph_product_factors,
    group_action,
    hecke_multiply,
    inner_product,
    parse_element,
    project_prefix,
    trace,
    universal_property_check,
)
from .expansion import (
    ExpansionTriple,
    OperatorTerm,
    apply_terms,
    breakdown,
    breakdown_term,
    enumerate_Aw,
    matrix_entries,
    t_expansion,
    triple_term,
    with_degree,
)
