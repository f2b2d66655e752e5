import pytest

from surgerygate.knots import (
    AlexanderPoly,
    KnotData,
    ReducedSummand,
    SeifertMatrix,
    VHProfile,
    alexander_from_seifert,
    second_derivative_at_one,
    sigma_total,
    signature_function,
    torsion_coefficients,
    validate_vh,
    vh_errors,
    vh_from_lspace_knot,
)

TREFOIL_A = SeifertMatrix(((-1, 1), (0, -1)))
FIG8_A = SeifertMatrix(((-1, 1), (0, 1)))


def test_alexander_normalization():
    with pytest.raises(ValueError):
        AlexanderPoly((1, 1))  # Delta(1) = 3
    with pytest.raises(ValueError):
        AlexanderPoly((3, -1, 0))  # zero leading coefficient
    assert AlexanderPoly((1,)).degree == 0
    assert AlexanderPoly((-1, 1)).degree == 1


def test_alexander_from_seifert():
    assert alexander_from_seifert(TREFOIL_A).coeffs == (-1, 1)
    assert alexander_from_seifert(FIG8_A).coeffs == (3, -1)
    assert alexander_from_seifert(SeifertMatrix(())).coeffs == (1,)
    with pytest.raises(ValueError):
        alexander_from_seifert(SeifertMatrix(((0,),)))  # odd size
    with pytest.raises(ValueError):
        alexander_from_seifert(SeifertMatrix(((0, 0), (0, 0))))  # det 0


def test_second_derivative():
    assert second_derivative_at_one(AlexanderPoly((1,))) == 0
    assert second_derivative_at_one(AlexanderPoly((-1, 1))) == 2
    assert second_derivative_at_one(AlexanderPoly((3, -1))) == -2
    assert second_derivative_at_one(AlexanderPoly((7, -4, 1))) == 0


def test_torsion_coefficients():
    assert torsion_coefficients(AlexanderPoly((-1, 1))) == [1]
    assert torsion_coefficients(AlexanderPoly((3, -1))) == [-1]
    assert torsion_coefficients(AlexanderPoly((1,))) == []
    assert torsion_coefficients(AlexanderPoly((1, -1, 1))) == [1, 1]


def test_vh_from_lspace_knot():
    trefoil = vh_from_lspace_knot(AlexanderPoly((-1, 1)))
    assert trefoil.v_pos == (1, 0)
    assert vh_from_lspace_knot(AlexanderPoly((1,))).v_pos == (0,)
    t25 = vh_from_lspace_knot(AlexanderPoly((1, -1, 1)))
    assert t25.v_pos == (1, 1, 0)
    with pytest.raises(ValueError):
        vh_from_lspace_knot(AlexanderPoly((3, -1)))  # t_0 = -1 < 0
    assert not validate_vh(trefoil)
    assert not validate_vh(t25)


def test_vh_profile_extension():
    vh = VHProfile(genus=1, v_pos=(1, 0))
    assert vh.V(0) == 1 and vh.V(1) == 0 and vh.V(5) == 0
    assert vh.V(-1) == 1 and vh.V(-2) == 2  # default V_{-k} = V_k + k
    assert vh.H(0) == vh.V(0)
    assert vh.H(-1) == vh.V(1)
    explicit = VHProfile(genus=1, v_pos=(0, 0), v_neg=(1,))
    assert explicit.V(-1) == 1 and explicit.V(-2) == 2  # unit-step tail


def test_validate_vh():
    assert validate_vh(VHProfile(genus=1, v_pos=(1, 0))) == []
    bad = validate_vh(VHProfile(genus=1, v_pos=(1, 2)))
    assert any("monotonicity" in v for v in bad)
    tail = validate_vh(VHProfile(genus=1, v_pos=(1, 1)))
    assert any("vanishing tail" in v for v in tail)
    declared = VHProfile(genus=1, v_pos=(0, 0), v_neg=(2,), declared_h=(1, 0))
    msgs = validate_vh(declared)
    assert any("H_0 != V_0" in v for v in msgs)
    # big steps warn but are not hard errors
    step = VHProfile(genus=1, v_pos=(2, 0), v_neg=(2,))
    assert any(v.startswith("warning:") for v in validate_vh(step))
    assert vh_errors(step) == []


def test_knot_data_validation():
    with pytest.raises(ValueError):
        KnotData(
            name="bad",
            alexander=AlexanderPoly((1,)),
            tau=0,
            vh=VHProfile(genus=1, v_pos=(0, 0)),
            reduced=(ReducedSummand(k=1, rank=2, local_gradings=(0, 0)),),
        )  # rank(1) != rank(-1)
    with pytest.raises(ValueError):
        KnotData(
            name="bad",
            alexander=AlexanderPoly((3, -1)),
            tau=0,
            vh=VHProfile(genus=1, v_pos=(0, 0)),
            seifert=TREFOIL_A,  # derives the trefoil polynomial
        )


def test_signature_function_values():
    assert signature_function(TREFOIL_A, 1, 2) == -2
    assert signature_function(TREFOIL_A, 1, 4) == -2
    # at a root of the Alexander polynomial the form is singular and the
    # signature is the average of the one-sided limits
    assert signature_function(TREFOIL_A, 1, 6) == -1
    assert signature_function(TREFOIL_A, 5, 6) == -1
    with pytest.raises(ValueError):
        signature_function(TREFOIL_A, 0, 5)
    with pytest.raises(ValueError):
        signature_function(TREFOIL_A, 5, 5)


def test_signature_conjugation_symmetry():
    for p in range(2, 15):
        for r in range(1, p):
            assert signature_function(TREFOIL_A, r, p) == signature_function(
                TREFOIL_A, p - r, p
            )
            assert signature_function(FIG8_A, r, p) == signature_function(
                FIG8_A, p - r, p
            )


def test_sigma_total():
    assert sigma_total(TREFOIL_A, 1) == 0
    assert sigma_total(TREFOIL_A, 2) == -2
    assert sigma_total(TREFOIL_A, 3) == -4
    assert sigma_total(SeifertMatrix(()), 17) == 0
    assert sigma_total(FIG8_A, 2) == 0  # figure-8 is amphichiral
