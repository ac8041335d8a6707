"""Exact sufficient-condition checks for weighted uniform K-stability of
labelled polytopes, with the fibration weights v = prod (p_a + c_a)^{n_a}.

Everything is computed in exact rational arithmetic (`fractions.Fraction`);
there is no floating point anywhere in a certificate path.
"""

from .bernstein import (
    CERTIFIED,
    INCONCLUSIVE,
    REFUTED,
    PositivityOutcome,
    bernstein_coefficients,
    certify_nonnegative,
)
from .exact import AffineFunc, Polynomial, radial_derivative, rat
from .futaki import (
    ExtremalSolution,
    FutakiNotVanishing,
    SingularMomentMatrix,
    assert_futaki_vanishes,
    df_invariant,
    df_via_cones,
    extremal_affine,
    futaki_character,
    solve_extremal,
    stability_weight,
)
from .jsonio import InputError
from .measure import integrate, integrate_boundary, integrate_facet, volume
from .polytope import (
    ConeDecomposition,
    EmptyInterior,
    LabelledPolytope,
    NotInterior,
    PolytopeError,
    RedundantLabel,
    Simplex,
    UnboundedPolytope,
    cone_decomposition,
    from_halfspaces,
    monotone_point,
    standard_fiber_polytope,
    triangulate,
)
from .probe import Crease, ProbeReport, crease_family, probe
from .stability import (
    StabilityReport,
    ThresholdResult,
    VERDICT_CERTIFIED,
    VERDICT_FAILS,
    VERDICT_INCONCLUSIVE,
    check_fano_fiber,
    check_fano_total,
    check_fibration,
    check_general,
    condition_poly_general,
    condition_value_fano,
    default_base_point,
    threshold_c,
)
from .weights import (
    BASE_PRESETS,
    BaseFactor,
    Convention,
    Fibration,
    NonpositiveWeight,
    NotFanoFibration,
    NotMonotoneFiber,
    NotReflexiveFiber,
    base_factor,
    fano_anticanonical,
    fibration,
    projective_bundle,
    soliton_weights,
)

__version__ = "0.1.0"

__all__ = [
    "AffineFunc",
    "BASE_PRESETS",
    "BaseFactor",
    "CERTIFIED",
    "ConeDecomposition",
    "Convention",
    "Crease",
    "EmptyInterior",
    "ExtremalSolution",
    "Fibration",
    "FutakiNotVanishing",
    "INCONCLUSIVE",
    "InputError",
    "LabelledPolytope",
    "NonpositiveWeight",
    "NotFanoFibration",
    "NotInterior",
    "NotMonotoneFiber",
    "NotReflexiveFiber",
    "PolytopeError",
    "Polynomial",
    "PositivityOutcome",
    "ProbeReport",
    "REFUTED",
    "RedundantLabel",
    "Simplex",
    "SingularMomentMatrix",
    "StabilityReport",
    "ThresholdResult",
    "UnboundedPolytope",
    "VERDICT_CERTIFIED",
    "VERDICT_FAILS",
    "VERDICT_INCONCLUSIVE",
    "assert_futaki_vanishes",
    "base_factor",
    "bernstein_coefficients",
    "certify_nonnegative",
    "check_fano_fiber",
    "check_fano_total",
    "check_fibration",
    "check_general",
    "condition_poly_general",
    "condition_value_fano",
    "cone_decomposition",
    "crease_family",
    "default_base_point",
    "df_invariant",
    "df_via_cones",
    "extremal_affine",
    "fano_anticanonical",
    "fibration",
    "from_halfspaces",
    "futaki_character",
    "integrate",
    "integrate_boundary",
    "integrate_facet",
    "monotone_point",
    "probe",
    "projective_bundle",
    "radial_derivative",
    "rat",
    "solve_extremal",
    "soliton_weights",
    "stability_weight",
    "standard_fiber_polytope",
    "threshold_c",
    "triangulate",
    "volume",
]
