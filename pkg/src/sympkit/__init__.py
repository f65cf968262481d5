"""sympkit: exact arithmetic for GSp4 and its arithmetic invariants.

Subpackages split by concern: exact coefficient domains (exact_arith), the
similitude group and its parabolic combinatorics (gsp4_core), exhaustive
censuses over small prime fields (finite_census), Hecke/Satake Euler factors
(hecke_l), and explicit four-dimensional Galois-type galleries (artin_gallery).
"""

from .exact_arith import (
    Cyclotomic,
    GaussianRational,
    PrimeFieldElem,
    QuadExtElem,
    Rational,
    UPoly,
    frobenius,
    quadratic_nonresidue,
    solve_sum_of_squares,
)
from .gsp4_core import (
    CharacterData,
    GSpElement,
    NotSimilitude,
    SiegelPoint,
    WeylWord,
    char_poly,
    casimir_pair,
    infinity_type_solve,
    is_in_levi,
    lambda_rep,
    moebius,
    oddness_normalize,
    similitude_of,
    torus,
    try_similitude,
    weyl_act,
    weyl_orbit_and_stabilizer,
    weyl_words,
)
from .finite_census import (
    CharPolyHistogram,
    FamilySpec,
    GroupSet,
    PackedElement,
    ResourceLimit,
    brute_similitude_scan,
    build_family,
    c_eta_M,
    charpoly_census,
    charpoly_coeffs,
    embed_gl2_siegel,
    enumerate_P1_reps,
    enumerate_gsp4,
    enumerate_sp4,
    family_base_subgroup,
    gl2_charpoly_census,
    gsp4_order,
    mulclose,
    pack_matrices,
    resolve_threads,
    sp4_order,
    unpack_keys,
)
from .hecke_l import (
    EulerFactor,
    HeckeData,
    LatticeRing,
    SatakeParams,
    check_int,
    density_ratio,
    endoscopic_spin_factor,
    enumerate_Y,
    hecke_poly,
    lambda_p2,
    read_eigen_csv,
    rou_charpolys,
    satake_to_hecke,
    spin_factor,
    std5_factor,
    wedge2_params,
)
from .artin_gallery import (
    FiniteMatrixGroup,
    endoscopic_embed,
    gallery_generators,
    gallery_report,
    gl2_euler_factor,
    group_closure,
    sym3_form,
    sym3_identities_check,
    sym3_lift,
)

__version__ = "0.1.0"

__all__ = [
    "Cyclotomic",
    "GaussianRational",
    "PrimeFieldElem",
    "QuadExtElem",
    "Rational",
    "UPoly",
    "frobenius",
    "quadratic_nonresidue",
    "solve_sum_of_squares",
    "CharacterData",
    "GSpElement",
    "NotSimilitude",
    "SiegelPoint",
    "WeylWord",
    "char_poly",
    "casimir_pair",
    "infinity_type_solve",
    "is_in_levi",
    "lambda_rep",
    "moebius",
    "oddness_normalize",
    "similitude_of",
    "torus",
    "try_similitude",
    "weyl_act",
    "weyl_orbit_and_stabilizer",
    "weyl_words",
    "CharPolyHistogram",
    "FamilySpec",
    "GroupSet",
    "PackedElement",
    "ResourceLimit",
    "brute_similitude_scan",
    "build_family",
    "c_eta_M",
    "charpoly_census",
    "charpoly_coeffs",
    "embed_gl2_siegel",
    "enumerate_P1_reps",
    "enumerate_gsp4",
    "enumerate_sp4",
    "family_base_subgroup",
    "gl2_charpoly_census",
    "gsp4_order",
    "mulclose",
    "pack_matrices",
    "resolve_threads",
    "sp4_order",
    "unpack_keys",
    "EulerFactor",
    "HeckeData",
    "LatticeRing",
    "SatakeParams",
    "check_int",
    "density_ratio",
    "endoscopic_spin_factor",
    "enumerate_Y",
    "hecke_poly",
    "lambda_p2",
    "read_eigen_csv",
    "rou_charpolys",
    "satake_to_hecke",
    "spin_factor",
    "std5_factor",
    "wedge2_params",
    "FiniteMatrixGroup",
    "endoscopic_embed",
    "gallery_generators",
    "gallery_report",
    "gl2_euler_factor",
    "group_closure",
    "sym3_form",
    "sym3_identities_check",
    "sym3_lift",
    "__version__",
]
