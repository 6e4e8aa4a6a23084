"""Acceptance gate: ten exact criteria, one pass/fail line each.

Every expected value below was derived with an independent symbolic oracle
before being frozen here; all comparisons are exact (no tolerances).
"""

import random

from etainv.cohring import CohClass, RingSpec
from etainv.coeffcore import Rational, poly_eval
from etainv.invariants import (
    _local_datum_raw,
    a1_direct,
    a1_poly_in_s,
    a1_residue,
    decompose_affine_in_t,
    family_scan,
    s2_closed_form,
)
from etainv.series import PowerSeries, ps_exp
from etainv.zcohomology import (
    AbelianGroupDesc,
    cohomology_Mbar,
    gysin_step_matrix,
    h4_M_order,
    snf,
)


def _criterion(name: str, ok: bool, detail: str):
    line = f"{'PASS' if ok else 'FAIL'}  {name}: {detail}"
    print(line)
    assert ok, line


def test_c01_gysin_cokernel_orders():
    bad = []
    for k in (2, 3, 4):
        spec = RingSpec(k, 1)
        for s, t in ((2, 1), (2, 3), (4, 3), (6, 5)):
            for l in range(1, 2 * k - 1):
                got = snf(gysin_step_matrix(spec, s, t, l))
                if got != (1, s * s):
                    bad.append((k, s, t, l, got))
    _criterion(
        "criterion 1 (Gysin cokernel orders)",
        not bad,
        "SNF = (1, s^2) for k in {2,3,4}, four (s,t) pairs, all l" if not bad else f"{bad}",
    )


def test_c02_h4_order():
    got = {s: h4_M_order(s) for s in (2, 4, 6)}
    ok = got == {2: 16, 4: 64, 6: 144}
    _criterion("criterion 2 (|H^4| of the quotient)", ok, f"4s^2 for s in (2,4,6): {got}")


def test_c03_cohomology_table_k2_s2():
    z = AbelianGroupDesc(1, ())
    o = AbelianGroupDesc(0, ())
    z4 = AbelianGroupDesc(0, (4,))
    expected = [z, o, z, o, z4, o, z4, z, o, z]
    got = cohomology_Mbar(2, 2)
    ok = got == expected
    _criterion(
        "criterion 3 (cohomology table k=2, s=2)",
        ok,
        "[" + ", ".join(str(g) for g in got) + "]",
    )


def test_c04_a1_three_way_agreement():
    bad = []
    for k in (2, 3):
        for s in (2, 4, 6):
            direct = a1_direct(k, s)
            residue = a1_residue(k, s)
            if direct != residue:
                bad.append(("residue", k, s, direct, residue))
            for c in (1, 3):
                _, affine = decompose_affine_in_t(k, c, s)
                if affine != direct:
                    bad.append(("affine", k, c, s, direct, affine))
    _criterion(
        "criterion 4 (three-way A1 agreement)",
        not bad,
        "direct = residue = affine on (k,s) in {2,3}x{2,4,6}, c in {1,3}" if not bad else f"{bad}",
    )


def test_c05_s2_closed_form():
    expected = {
        2: Rational(-1, 4),
        3: Rational(3, 16),
        4: Rational(-1, 8),
        5: Rational(5, 64),
    }
    got = {k: a1_direct(k, 2) for k in range(2, 6)}
    closed = {k: s2_closed_form(k) for k in range(2, 6)}
    ok = got == expected and closed == expected
    _criterion(
        "criterion 5 (s=2 closed form)",
        ok,
        f"a1_direct(k,2) = (-1)^(k-1) k/2^(k+1) for k=2..5: {[str(got[k]) for k in got]}",
    )


def test_c06_affinity_in_t():
    vals = [_local_datum_raw(2, 1, 2, t) for t in (1, 3, 5, 7)]
    second = [vals[i] - 2 * vals[i + 1] + vals[i + 2] for i in range(2)]
    ok = not any(second) and vals == [
        Rational(3, 8),
        Rational(7, 8),
        Rational(11, 8),
        Rational(15, 8),
    ]
    _criterion(
        "criterion 6 (affinity in t)",
        ok,
        f"local datum at (2,1,2), t=1,3,5,7: {[str(x) for x in vals]}, zero second differences",
    )


def test_c07_family_distinctness():
    result = family_scan(2, 1, 2, list(range(1, 50, 2)))
    etas = []
    ok = True
    for entry in result.entries:
        r = entry.report
        if r is None or r.eta_rel != -2 * r.a_value:
            ok = False
            break
        etas.append(r.eta_rel)
    ok = ok and len(set(etas)) == 25 and result.distinct_count == 25
    _criterion(
        "criterion 7 (distinctness at desk scale)",
        ok,
        f"{result.distinct_count} pairwise distinct eta values, eta = -2a in every row",
    )


def test_c08_a1_polynomial_structure():
    bad = []
    frozen = {
        2: ["0/1", "-1/48", "0/1", "-5/192"],
        3: ["0/1", "1/240", "0/1", "5/768", "0/1", "61/15360"],
    }
    for k in (2, 3):
        poly = a1_poly_in_s(k)
        if poly.to_strings() != frozen[k]:
            bad.append((k, poly.to_strings()))
        if poly.degree() > 2 * k - 1:
            bad.append((k, "degree", poly.degree()))
        if any(poly[i] for i in range(0, poly.degree() + 1, 2)):
            bad.append((k, "even terms"))
        for s in (2, 4, 6):
            if poly_eval(poly, Rational(s)) != a1_direct(k, s):
                bad.append((k, s, "mismatch"))
    _criterion(
        "criterion 8 (A1 polynomial structure)",
        not bad,
        "odd, degree <= 2k-1, matches a1_direct at s in {2,4,6}" if not bad else f"{bad}",
    )


def test_c09_series_engine():
    problems = []
    denom = ps_exp(Rational(1, 2), 5) - ps_exp(Rational(-1, 2), 5)
    ahat = PowerSeries.constant("x", 1, 4).divide(PowerSeries("x", denom.coeffs[1:], 4))
    expected_ahat = PowerSeries(
        "x", [1, 0, Rational(-1, 24), 0, Rational(7, 5760)], 4
    )
    if ahat != expected_ahat:
        problems.append(f"A-hat factor = {list(ahat.coeffs)}")
    two_sinh = ps_exp(Rational(1, 2), 6, "u") - ps_exp(Rational(-1, 2), 6, "u")
    rev = two_sinh.revert()
    expected_rev = [0, 1, 0, Rational(-1, 24), 0, Rational(3, 640), 0]
    if any(a - b for a, b in zip(rev.coeffs, expected_rev)):
        problems.append(f"revert(2sinh(u/2)) = {list(rev.coeffs)}")
    rng = random.Random(20240)
    for trial in range(10):
        coeffs = [0, 1] + [
            Rational(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(11)
        ]
        g = PowerSeries("x", coeffs, 12)
        if g.compose(g.revert()) != PowerSeries.identity("x", 12):
            problems.append(f"compose(revert) != identity, trial {trial}")
        if g.revert().compose(g) != PowerSeries.identity("x", 12):
            problems.append(f"revert(compose) != identity, trial {trial}")
    _criterion(
        "criterion 9 (series engine)",
        not problems,
        "A-hat factor 1 - x^2/24 + 7x^4/5760, reversion w - w^3/24 + 3w^5/640, "
        "compose/revert identities to order 12" if not problems else f"{problems}",
    )


def test_c10_ring_engine():
    rng = random.Random(20241)
    checks = 0
    problems = []
    for k in (2, 3):
        for c in (1, 3):
            spec = RingSpec(k, c)
            u = CohClass.u(spec)
            v = CohClass.v(spec)
            top = u ** (2 * k - 1) * v
            if u ** (2 * k) != top.scale(c):
                problems.append(f"u^(2k) != c u^(2k-1) v at (k={k}, c={c})")
            if u ** (2 * k + 1):
                problems.append(f"u^(2k+1) != 0 at (k={k}, c={c})")
            for _ in range(250):
                a, b, d = (
                    CohClass(
                        spec,
                        [rng.randint(-5, 5) for _ in range(2 * k)],
                        [rng.randint(-5, 5) for _ in range(2 * k)],
                    )
                    for _ in range(3)
                )
                if (a * b) * d != a * (b * d):
                    problems.append(f"associativity fails at (k={k}, c={c})")
                if a * b != b * a:
                    problems.append(f"commutativity fails at (k={k}, c={c})")
                # grading: a product of homogeneous pieces of degrees d1 and d2
                # only ever lands in degree d1 + d2
                i = rng.randrange(2 * k)
                j = rng.randrange(2 * k)
                ha = CohClass(spec, [0] * i + [rng.randint(1, 5)])
                hb = CohClass(spec, (), [0] * j + [rng.randint(1, 5)])
                parts = (ha * hb).graded_parts()
                if any(deg != 2 * i + 2 * j + 2 for deg in parts):
                    problems.append(
                        f"grading fails at (k={k}, c={c}, i={i}, j={j}): {sorted(parts)}"
                    )
                checks += 1
    _criterion(
        "criterion 10 (ring engine)",
        not problems and checks == 1000,
        f"defining relations exact, {checks} randomized associativity/commutativity/"
        "grading checks" if not problems else f"{problems}",
    )
