"""Exact series toolkit for colored vertex counts, transport kernels, and
framed generating functions of cyclic-quotient geometries.

Everything is computed in exact arithmetic: rationals, cyclotomic numbers,
and truncated multivariate series that track how much of the true object
their stored data guarantees.
"""

__version__ = "0.1.0"

from .exactnum import CycloField, CycloNum, cyclo_field, cyclotomic_polynomial, field_for
from .series import (
    GradeCap,
    PrecisionError,
    Series,
    SeriesContext,
    VarSpec,
    coeff_from_data,
    coeff_to_data,
)
from .partitions import (
    aut_gamma,
    check_partition,
    colored_box_count,
    conjugate,
    gamma_vectors,
    hooks,
    kappa,
    partitions_of,
    z_aut,
)
from .characters import (
    character_table,
    chi,
    colored_context,
    powersum_colored,
    schur_at_colored,
    schur_at_colored_jt,
)
from .hurwitz import (
    PhiKernel,
    burnside_value,
    factorization_oracle,
    phi_composition_check,
    simple_branch_count,
)
from .dt_vertex import (
    RationalForm,
    box_context,
    box_counting_series,
    correspondence_report,
    lattice_ideal_states,
    reduced_vertex_closed,
    schur_rational,
    trig_context,
    verify_correspondence,
    vertex_side_series,
    volume_counts,
)
from .dt_vertex import r_bullet_zero
from .gw_vertex import (
    FramedVertex,
    GwCap,
    abelian_lift,
    assemble_G0,
    cap_closed_form,
    character_image_order,
    connected_profile_series,
    g_bullet_mu,
    gw_context,
    lambda_g_psi_series,
    mv_a1_check,
    project_element,
    quantum_dim_hook,
    quantum_dim_sine,
    r_bullet_tau,
    transport_back,
)
from .localgw import (
    LocalBlock,
    block_from_data,
    block_to_data,
    cap_family,
    cap_level0,
    cap_series,
    emit_table,
    glue,
    identity_block,
    local_context,
    run_glue_plan,
)

__all__ = [
    "CycloField",
    "CycloNum",
    "cyclo_field",
    "cyclotomic_polynomial",
    "field_for",
    "GradeCap",
    "PrecisionError",
    "Series",
    "SeriesContext",
    "VarSpec",
    "coeff_from_data",
    "coeff_to_data",
    "aut_gamma",
    "check_partition",
    "colored_box_count",
    "conjugate",
    "gamma_vectors",
    "hooks",
    "kappa",
    "partitions_of",
    "z_aut",
    "character_table",
    "chi",
    "colored_context",
    "powersum_colored",
    "schur_at_colored",
    "schur_at_colored_jt",
    "PhiKernel",
    "burnside_value",
    "factorization_oracle",
    "phi_composition_check",
    "simple_branch_count",
    "RationalForm",
    "box_context",
    "box_counting_series",
    "correspondence_report",
    "lattice_ideal_states",
    "reduced_vertex_closed",
    "schur_rational",
    "trig_context",
    "verify_correspondence",
    "vertex_side_series",
    "volume_counts",
    "r_bullet_zero",
    "FramedVertex",
    "GwCap",
    "abelian_lift",
    "assemble_G0",
    "cap_closed_form",
    "character_image_order",
    "connected_profile_series",
    "g_bullet_mu",
    "gw_context",
    "lambda_g_psi_series",
    "mv_a1_check",
    "project_element",
    "quantum_dim_hook",
    "quantum_dim_sine",
    "r_bullet_tau",
    "transport_back",
    "LocalBlock",
    "block_from_data",
    "block_to_data",
    "cap_family",
    "cap_level0",
    "cap_series",
    "emit_table",
    "glue",
    "identity_block",
    "local_context",
    "run_glue_plan",
    "__version__",
]
