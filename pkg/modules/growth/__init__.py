"""
Growth of right-angled Coxeter groups: word counts, the radius of convergence
of the fundamental series, the factoriality interval and prefix counts.
"""
from .automaton import SuccessorAutomaton, dominant_eigenvalue, successor_automaton, transfer_counts, transfer_matrix
from .series import (
    BOUNDARY,
    FACTOR,
    FACTOR_PLUS_C,
    NOT_APPLICABLE,
    Classification,
    GrowthReport,
    bfs_counts,
    count_by_length,
    factor_classification,
    growth_rate,
    growth_report,
    ratio_estimate,
    subsystem_monotonicity_check,
)
from .kappa import KappaReport, kappa_bound_check, kappa_count, kappa_oracle
