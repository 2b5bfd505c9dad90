"""Fusion rings of quantum groups at roots of unity over the level-k Weyl alcove."""
from .characters import CharacterTable, dominant_character, weight_multiplicity
from .closed_subsets import (
    ClassificationTag,
    ClosedSubset,
    chart_shifts,
    classify,
    closure,
    delta_Z,
    enumerate_closed,
    gamma_Z,
    is_closed,
    min_fusion_power_containing_zero,
)
from .cyclotomic import CyclotomicNumber
from .fusion import (
    AlcoveCtx,
    affine_to_alcove,
    alcove_context,
    apply_simple_current,
    dual_weight,
    enumerate_alcove,
    fusion_coefficient,
    fusion_product,
    fusion_table,
)
from .modular import (
    ModularData,
    degenerate_report,
    identify_degenerate_ring,
    is_degenerate,
    modular_data,
    modularity_report,
    qdim,
    qdim_exact,
    s_entry,
    s_matrix,
    twist,
    twist_exponent,
    verify_s_identities,
)
from .root_system import (
    AlgebraId,
    InvariantViolation,
    RootSystem,
    build_root_system,
    center,
    inner_product,
    subgroups_of_center,
    to_dominant,
)

__all__ = [
    "affine_to_alcove",
    "alcove_context",
    "AlcoveCtx",
    "AlgebraId",
    "apply_simple_current",
    "build_root_system",
    "center",
    "CharacterTable",
    "chart_shifts",
    "ClassificationTag",
    "classify",
    "ClosedSubset",
    "closure",
    "CyclotomicNumber",
    "degenerate_report",
    "delta_Z",
    "dominant_character",
    "dual_weight",
    "enumerate_alcove",
    "enumerate_closed",
    "fusion_coefficient",
    "fusion_product",
    "fusion_table",
    "gamma_Z",
    "identify_degenerate_ring",
    "inner_product",
    "InvariantViolation",
    "is_closed",
    "is_degenerate",
    "min_fusion_power_containing_zero",
    "modular_data",
    "ModularData",
    "modularity_report",
    "qdim",
    "qdim_exact",
    "RootSystem",
    "s_entry",
    "s_matrix",
    "subgroups_of_center",
    "to_dominant",
    "twist",
    "twist_exponent",
    "verify_s_identities",
    "weight_multiplicity",
]

__version__ = "0.1.0"
