"""Two-sided bounds on the Crouzeix ratio of KMS matrices."""

from ._core import (
    CrouzeixError,
    blaschke_norm,
    boundary,
    boundary_point,
    boundary_svg,
    bracket,
    cardioid_p,
    cond_h1,
    convergence_study,
    kms_matrix,
    map_kms,
    support_function,
    tangential_poly,
    verify_inclusion,
)

__all__ = [
    "CrouzeixError",
    "blaschke_norm",
    "boundary",
    "boundary_point",
    "boundary_svg",
    "bracket",
    "cardioid_p",
    "cond_h1",
    "convergence_study",
    "kms_matrix",
    "map_kms",
    "support_function",
    "tangential_poly",
    "verify_inclusion",
]
