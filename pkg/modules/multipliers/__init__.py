"""
Multipliers on the Hecke algebra: radial maps, word-length projections and
their reconstruction from dilations, with numeric norm witnesses.
"""
from .radial import generator_matrix, kraus_check, kraus_grid, kraus_matrices, radial_multiplier
from .projections import (
    SignedSetVector,
    delta_identity_check,
    pairing_table_check,
    phi_component,
    rho_component,
    wordlength_projection,
    wordlength_slice,
)
from .dilations import (
    DilationTerm,
    DilationVector,
    beta_coefficient,
    dilation_apply,
    dilation_norm,
    f_indicator,
    upol_scan,
    window_count,
)
from .cutdown import (
    aux_sum,
    aux_sum_check,
    aux_sum_scan,
    beta_reindex_check,
    cutdown_identity_check,
    exclusion_check,
    exclusion_scan,
    sigma_entry,
)
from .norms import (
    TruncatedMatrix,
    ccap_convergence_demo,
    ccap_gap,
    default_schedule,
    operator_norm_lower,
    power_norm,
    truncated_matrix,
)
