"""Local datum, eta reports, the three A1 paths, and family scans."""

import pytest

from etainv.cohring import CohClass, InsufficientOrder, RingSpec, coh_integrate
from etainv.coeffcore import Rational, UniPoly, poly_eval
from etainv.invariants import (
    FamilyParams,
    InvalidParams,
    SIGN_PLUS,
    a1_direct,
    a1_poly_in_s,
    a1_residue,
    chern_total_TBc,
    decompose_affine_in_t,
    family_scan,
    find_good_s,
    local_datum,
    local_datum_integrand,
    relative_eta,
    s2_closed_form,
)


# -- parameter validation --------------------------------------------------


def test_params_validation():
    FamilyParams(2, 1, 2, 1)
    with pytest.raises(InvalidParams):
        FamilyParams(1, 1, 2, 1)
    with pytest.raises(InvalidParams):
        FamilyParams(2, 2, 2, 1)
    with pytest.raises(InvalidParams):
        FamilyParams(2, 1, 3, 1)
    with pytest.raises(InvalidParams):
        FamilyParams(2, 1, 0, 1)
    with pytest.raises(InvalidParams):
        FamilyParams(2, 1, 2, 4)
    with pytest.raises(InvalidParams):
        FamilyParams(2, 1, 6, 3)


def test_negative_parameters_allowed():
    assert local_datum(FamilyParams(2, 1, -2, 1)) is not None
    assert local_datum(FamilyParams(2, -1, 2, -1)) is not None


# -- Chern class and integrand --------------------------------------------


def test_chern_total_frozen():
    got = chern_total_TBc(RingSpec(2, 1))
    assert got == CohClass(RingSpec(2, 1), [1, 4, 6, 4], [1, 5, 9, 8])
    got3 = chern_total_TBc(RingSpec(2, 3))
    assert got3 == CohClass(RingSpec(2, 3), [1, 4, 6, 4], [-1, -1, 3, 8])


def test_chern_degree2_part():
    # degree-2 part is 2k*u + (2-c)*v
    for k, c in ((2, 1), (2, 3), (3, 5)):
        spec = RingSpec(k, c)
        part = chern_total_TBc(spec).graded_parts()[2]
        assert part == CohClass(spec, [0, 2 * k], [2 - c])


def test_integrand_frozen_normal_form():
    got = local_datum_integrand(FamilyParams(2, 1, 2, 1))
    expected = CohClass(
        RingSpec(2, 1),
        [Rational(1, 2), 0, Rational(-1, 3), 0],
        [0, Rational(-5, 24), 0, Rational(3, 8)],
    )
    assert got == expected
    assert coh_integrate(got) == Rational(3, 8)


# -- local datum and eta ----------------------------------------------------


def test_local_datum_frozen():
    vals = [local_datum(FamilyParams(2, 1, 2, t)) for t in (1, 3, 5, 7)]
    assert vals == [Rational(3, 8), Rational(7, 8), Rational(11, 8), Rational(15, 8)]


def test_decompose_affine_frozen():
    assert decompose_affine_in_t(2, 1, 2) == (Rational(1, 8), Rational(-1, 4))
    assert decompose_affine_in_t(2, 3, 2) == (Rational(3, 8), Rational(-1, 4))
    assert decompose_affine_in_t(2, 1, -2) == (Rational(1, 8), Rational(1, 4))


def test_decompose_handles_probe_noncoprime_s():
    # probes use t in {1,3,5}; s divisible by 3 and 5 must still work
    a0, a1 = decompose_affine_in_t(2, 1, 6)
    assert a1 == a1_direct(2, 6)
    a0, a1 = decompose_affine_in_t(2, 1, 10)
    assert a1 == a1_direct(2, 10)


def test_relative_eta_report():
    report = relative_eta(FamilyParams(2, 1, 2, 3))
    assert report.a_value == Rational(7, 8)
    assert report.eta_rel == Rational(-7, 4)
    assert report.eta_rel == -2 * report.a_value
    assert report.A0 == Rational(1, 8)
    assert report.A1 == Rational(-1, 4)
    assert report.sign_convention == SIGN_PLUS


def test_report_to_dict_exact_and_approx():
    report = relative_eta(FamilyParams(2, 1, 2, 3))
    d = report.to_dict()
    assert d["a_value"] == "7/8"
    assert d["eta_rel"] == "-7/4"
    assert d["A1"] == "-1/4"
    assert "a_value_approx" not in d
    da = report.to_dict(approx=True)
    assert da["a_value_approx"] == 0.875
    assert da["eta_rel_approx"] == -1.75


def test_eta_rational_in_general():
    # integer-valued eta is not expected; rationals with denominators are fine
    report = relative_eta(FamilyParams(3, 1, 2, 1))
    assert report.eta_rel == -2 * report.a_value


def test_order_override_too_small():
    with pytest.raises(InsufficientOrder):
        local_datum(FamilyParams(2, 1, 2, 1), order=3)


def test_order_override_larger_is_stable():
    base = local_datum(FamilyParams(2, 1, 2, 1))
    assert local_datum(FamilyParams(2, 1, 2, 1), order=20) == base


# -- A1 paths ----------------------------------------------------------------


def test_a1_direct_frozen_table():
    table = {
        (2, 2): Rational(-1, 4),
        (2, -2): Rational(1, 4),
        (3, 2): Rational(3, 16),
        (2, 4): Rational(-7, 4),
        (4, 2): Rational(-1, 8),
        (5, 2): Rational(5, 64),
        (2, 6): Rational(-23, 4),
        (3, 4): Rational(9, 2),
        (3, 6): Rational(517, 16),
    }
    for (k, s), expected in table.items():
        assert a1_direct(k, s) == expected, (k, s)


def test_a1_residue_matches_direct():
    for k in (2, 3, 4):
        for s in (2, -2, 4, 6):
            assert a1_residue(k, s) == a1_direct(k, s), (k, s)


def test_s2_closed_form_extends():
    for k in range(2, 7):
        expected = Rational((-1) ** (k - 1) * k, 2 ** (k + 1))
        assert s2_closed_form(k) == expected
        assert a1_direct(k, 2) == expected


def test_a1_poly_evaluations():
    for k in (2, 3, 4):
        poly = a1_poly_in_s(k)
        assert isinstance(poly, UniPoly)
        for s in (2, -4, 6):
            assert poly_eval(poly, Rational(s)) == a1_direct(k, s)


def test_a1_odd_in_s():
    for k in (2, 3):
        for s in (2, 4, 6):
            assert a1_direct(k, -s) == -a1_direct(k, s)


# -- s filtering and family scans -------------------------------------------


def test_find_good_s():
    assert find_good_s(2, [2, 4, -2, 6]) == [2, 4, -2, 6]
    with pytest.raises(InvalidParams):
        find_good_s(2, [3])
    with pytest.raises(InvalidParams):
        find_good_s(2, [0])


def test_family_scan_counts_and_errors():
    result = family_scan(2, 1, 2, [1, 3, 5])
    assert result.distinct_count == 3
    assert all(e.error is None for e in result.entries)
    mixed = family_scan(2, 1, 2, [1, 2, 3])
    assert mixed.distinct_count == 2
    bad = [e for e in mixed.entries if e.error is not None]
    assert len(bad) == 1 and bad[0].t == 2


def test_family_scan_to_dict_rows():
    d = family_scan(2, 1, 2, [1, 2]).to_dict()
    ok_rows = [r for r in d["rows"] if "error" not in r]
    err_rows = [r for r in d["rows"] if "error" in r]
    assert len(ok_rows) == 1 and ok_rows[0]["eta_rel"] == "-3/4"
    assert len(err_rows) == 1 and err_rows[0]["t"] == 2


def test_family_scan_large_all_distinct():
    result = family_scan(2, 1, 2, list(range(1, 40, 2)))
    assert result.distinct_count == len(result.entries) == 20
