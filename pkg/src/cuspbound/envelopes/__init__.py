"""Coefficient envelopes, L-function constants and the final coefficient bound."""

from .lfunc import (
    lfunc_constants_suite,
    lfunc_residue_identity,
    orthogonal_norm_floor,
    petersson_lower_level1,
    petersson_lower_newform,
    residue_reports,
)
from .sectors import (
    EnvelopeConstants,
    SectorEnvelope,
    check_sector_one_envelope,
    envelope_constants_from_rigor,
    envelope_reports,
)
from .theorem import (
    B_of_k,
    InnerProductBreakdown,
    b_of_k_agreement,
    b_of_k_conservative,
    b_of_k_downstream,
    b_of_k_recomputed,
    bound_I1,
    bound_I2,
    bound_I3,
    certify_form,
    certify_level_one,
    deligne_check,
    dims,
    inner_product_breakdown,
    inner_product_upper,
    level_one_bound,
    theorem1_bound,
    theorem_reports,
)

__all__ = [
    "B_of_k",
    "EnvelopeConstants",
    "InnerProductBreakdown",
    "SectorEnvelope",
    "b_of_k_agreement",
    "b_of_k_conservative",
    "b_of_k_downstream",
    "b_of_k_recomputed",
    "bound_I1",
    "bound_I2",
    "bound_I3",
    "certify_form",
    "certify_level_one",
    "check_sector_one_envelope",
    "deligne_check",
    "dims",
    "envelope_constants_from_rigor",
    "envelope_reports",
    "inner_product_breakdown",
    "inner_product_upper",
    "level_one_bound",
    "lfunc_constants_suite",
    "lfunc_residue_identity",
    "orthogonal_norm_floor",
    "petersson_lower_level1",
    "petersson_lower_newform",
    "residue_reports",
    "theorem1_bound",
    "theorem_reports",
]
