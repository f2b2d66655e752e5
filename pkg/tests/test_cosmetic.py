from math import gcd

import pytest

from surgerygate.cosmetic import (
    CosmeticReport,
    SlopePair,
    check_knot,
    enumerate_candidate_pairs,
    nu_gate,
)
from surgerygate.knots import AlexanderPoly, KnotData, ReducedSummand, VHProfile
from surgerygate.lens import LensSpace, lambda_lens


def test_slope_pair_validation():
    SlopePair(5, 2)
    SlopePair(1, 7)
    with pytest.raises(ValueError):
        SlopePair(5, 1)  # 1 is not -1 mod 5
    with pytest.raises(ValueError):
        SlopePair(4, 2)  # not reduced
    with pytest.raises(ValueError):
        SlopePair(0, 1)
    assert SlopePair(5, 2).positive.p == 5
    assert SlopePair(5, 2).negative.p == -5


def test_enumeration_brute_force_agreement():
    got = {(c.p, c.q) for c in enumerate_candidate_pairs(30, 30)}
    want = {
        (p, q)
        for p in range(1, 31)
        for q in range(1, 31)
        if gcd(p, q) == 1 and (q * q + 1) % p == 0
    }
    assert got == want


def test_enumeration_examples():
    pairs = [(c.p, c.q) for c in enumerate_candidate_pairs(5, 3)]
    assert pairs == sorted(pairs)
    for expected in [(1, 1), (1, 2), (1, 3), (2, 1), (5, 2), (5, 3)]:
        assert expected in pairs
    # p = 3 and p = 4 admit no candidate q (-1 is not a square there)
    big = enumerate_candidate_pairs(13, 12)
    assert not any(c.p in (3, 4) for c in big)
    assert (13, 5) in {(c.p, c.q) for c in big}
    assert (13, 8) in {(c.p, c.q) for c in big}


def test_candidate_lens_lambda_vanishes():
    for c in enumerate_candidate_pairs(40, 40):
        if c.p == 1:
            continue
        assert lambda_lens(LensSpace(c.p, c.q)) == 0, (c.p, c.q)


def test_trefoil_obstructed(trefoil):
    report = check_knot(trefoil, 10, 10)
    assert report.verdict == "Obstructed"
    assert "tau" in report.reason
    assert report.candidates == ()
    by_name = {c.name: c for c in report.checks}
    assert by_name["tau-vanishing"].status == "failed"
    assert by_name["alexander-second-derivative"].status == "failed"
    assert by_name["v0-vanishing"].status == "failed"


def test_figure8_obstructed_with_skipped_mirror_recorded(figure8, nine44):
    # figure-8 carries mirror data; strip it to exercise the skip path
    import dataclasses

    stripped = dataclasses.replace(figure8, mirror_vh=None)
    report = check_knot(stripped, 5, 5)
    assert report.verdict == "Obstructed"  # Delta''(1) = -2
    assert any(c.status == "skipped" for c in report.checks)
    assert "mirror_vh" in report.missing_inputs


def test_nine44_not_obstructed(nine44):
    report = check_knot(nine44, 10, 10)
    assert report.verdict == "NotObstructed"
    assert report.reason is None
    assert report.candidates
    assert any(c.p == 1 for c in report.candidates)
    assert all(s.status == "passed" for s in report.checks)


def test_unknot_rejected(unknot):
    with pytest.raises(ValueError):
        check_knot(unknot, 5, 5)


def test_indeterminate_without_mirror():
    # passes every orientation-available check but lacks mirror data
    K = KnotData(
        name="syn_d",
        alexander=AlexanderPoly((1,)),
        tau=0,
        vh=VHProfile(genus=1, v_pos=(0, 0)),
        reduced=(ReducedSummand(k=0, rank=2, local_gradings=(0, -1)),),
    )
    report = check_knot(K, 5, 5)
    assert report.verdict == "Indeterminate"
    assert report.candidates == ()
    assert "mirror_vh" in report.missing_inputs
    # supplying mirror data refines the verdict (never the other way)
    import dataclasses

    refined = check_knot(
        dataclasses.replace(K, mirror_vh=VHProfile(genus=1, v_pos=(0, 0))), 5, 5
    )
    assert refined.verdict == "NotObstructed"


def test_lspace_profile_always_obstructed(syn_a, syn_c):
    for K in (syn_a, syn_c):
        report = check_knot(K, 6, 6)
        assert report.verdict == "Obstructed"


def test_nu_gate(figure8, trefoil):
    rec = nu_gate(figure8)
    assert rec.applied and rec.consistent
    rec = nu_gate(trefoil)
    assert not rec.applied  # V_0 = 1, hypothesis not met
    bad = KnotData(
        name="bad_tau",
        alexander=AlexanderPoly((1,)),
        tau=1,
        vh=VHProfile(genus=1, v_pos=(0, 0)),
    )
    rec = nu_gate(bad)
    assert rec.applied and not rec.consistent


def test_report_invariants():
    with pytest.raises(ValueError):
        CosmeticReport(
            knot_name="x",
            verdict="Obstructed",
            reason=None,
            candidates=(),
            missing_inputs=(),
            checks=(),
            nu=nu_gate(
                KnotData(
                    name="x",
                    alexander=AlexanderPoly((1,)),
                    tau=0,
                    vh=VHProfile(genus=0, v_pos=(0,)),
                )
            ),
        )
