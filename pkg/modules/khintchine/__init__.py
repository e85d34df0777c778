"""
Khintchine decompositions of products of generators, their factorization and
intertwining checks, diagonal word families and the crossover arithmetic.
"""
from .components import (
    KhintchineComponent,
    apply_components,
    factorizations,
    free_agreement,
    index_set,
    jd_free,
    jd_general,
    summand_count,
    uniqueness_check,
    verify_factorization,
)
from .intertwiners import intertwiner_check, q_map, r_adjoint, r_map
from .families import FREE3, RST, VARIANTS, DiagonalFamily, diagonal_condition, diagonal_family
from .crossover import (
    column_row_check,
    crossover,
    crossover_report,
    crossover_sides,
    dense_norm,
    rst_constant,
    structured_norm_bound,
)
