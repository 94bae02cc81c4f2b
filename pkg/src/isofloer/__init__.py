"""Displaceability obstructions for Gauss images of isoparametric hypersurfaces.

The package classifies the Gauss image of each isoparametric hypersurface in a
sphere, viewed as a monotone Lagrangian in the complex hyperquadric, as Wide
(Floer homology of full rank, hence non-displaceable), NonDisplaceable (Floer
homology nonzero by a spectral-sequence narrowness contradiction), or
Unresolved.
"""

from .catalog import (
    CitedFact,
    FamilyError,
    GaussImageData,
    GaussImageHomology,
    IsoparametricFamily,
    MissingTableError,
    collapse_step,
    enumerate_families,
    gauss_image_betti_g3,
    gauss_image_data,
    minimal_maslov,
    munzner_betti_N,
    orientable,
    validate_family,
)
from .criteria import (
    CaseReport,
    JustificationStep,
    NON_DISPLACEABLE,
    STATUSES,
    UNRESOLVED,
    WIDE,
    classify,
    damian_nondisplaceable,
    report_from_json,
    report_to_json,
    volume_lower_bound,
    wide_check_biran_cornea,
)
from .homology import (
    BettiProfile,
    DimBound,
    ProfileError,
    check_poincare,
    euler_char,
    make_partial_profile,
    make_profile,
    profile_from_json,
    profile_to_json,
    total_betti,
)
from .specseq import (
    CONTRADICTION,
    EngineError,
    FEASIBLE,
    INFEASIBLE,
    MaslovTooSmallError,
    NO_CONTRADICTION,
    NarrownessVerdict,
    RankVector,
    RankViolationError,
    ReducedPage,
    SearchCapError,
    UnknownSlotsError,
    WitnessError,
    init_page,
    oracle_narrow_feasible,
    propagate_narrow,
    replay_witness,
    step_page,
    verdict_from_json,
    verdict_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "BettiProfile",
    "CaseReport",
    "CitedFact",
    "CONTRADICTION",
    "DimBound",
    "EngineError",
    "FEASIBLE",
    "FamilyError",
    "GaussImageData",
    "GaussImageHomology",
    "INFEASIBLE",
    "IsoparametricFamily",
    "JustificationStep",
    "MaslovTooSmallError",
    "MissingTableError",
    "NO_CONTRADICTION",
    "NON_DISPLACEABLE",
    "NarrownessVerdict",
    "ProfileError",
    "RankVector",
    "RankViolationError",
    "ReducedPage",
    "STATUSES",
    "SearchCapError",
    "UNRESOLVED",
    "UnknownSlotsError",
    "WIDE",
    "WitnessError",
    "check_poincare",
    "classify",
    "collapse_step",
    "damian_nondisplaceable",
    "enumerate_families",
    "euler_char",
    "gauss_image_betti_g3",
    "gauss_image_data",
    "init_page",
    "make_partial_profile",
    "make_profile",
    "minimal_maslov",
    "munzner_betti_N",
    "oracle_narrow_feasible",
    "orientable",
    "profile_from_json",
    "profile_to_json",
    "propagate_narrow",
    "replay_witness",
    "report_from_json",
    "report_to_json",
    "step_page",
    "total_betti",
    "validate_family",
    "verdict_from_json",
    "verdict_to_json",
    "volume_lower_bound",
    "wide_check_biran_cornea",
]
