"""Heegaard Floer correction terms of Dehn surgeries on knots in S^3,
exact Dedekind sums and lens-space invariants, Casson-Walker and
Casson-Gordon surgery formulas, and the purely-cosmetic-surgery
obstruction pipeline built on them."""

__version__ = "0.1.0"

from .arith import (
    NegContFrac,
    Rational,
    Slope,
    dedekind_sum,
    dedekind_sum_cf,
    is_cosmetic_residue,
    mod_inverse,
    neg_cont_frac,
    reduce_slope,
    sawtooth,
)
from .classical import (
    SurgeryPresentation,
    casson_gordon,
    casson_walker,
    rustamov_identity_check,
)
from .cone import (
    ConeComplex,
    ConeSpec,
    GradedModule,
    TruncatedTower,
    TruncationError,
    build_cone,
    cone_homology,
    d_surgery,
    d_surgery_signed,
    euler_char_red,
    hf_red,
    hf_red_total_rank,
    mirror_knot,
)
from .cosmetic import (
    CheckResult,
    CosmeticReport,
    SlopePair,
    check_knot,
    enumerate_candidate_pairs,
    nu_gate,
)
from .knotfile import (
    KnotFileError,
    bundled_knots,
    knot_by_name,
    parse_knot_file,
    serialize_knot_file,
)
from .knots import (
    AlexanderPoly,
    KnotData,
    NearSingularError,
    ReducedSummand,
    SeifertMatrix,
    VHProfile,
    alexander_from_seifert,
    second_derivative_at_one,
    sigma_total,
    signature_function,
    torsion_coefficients,
    validate_vh,
    vh_from_lspace_knot,
)
from .lens import (
    LensSpace,
    SpinCIndex,
    d_lens,
    d_lens_all,
    d_lens_signed,
    lambda_lens,
    lambda_lens_signed,
    tau_lens,
)
