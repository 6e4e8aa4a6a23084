"""Built-in verification suite: re-derives the published values and internal
cross-checks from scratch and reports one pass/fail line per criterion.

The same checks back the pytest acceptance module; here they are wired into
the CLI (`etainv verify --suite paper`) so a user can validate an install
without a test harness.
"""

from __future__ import annotations

import random

from .cohring import CohClass, RingSpec
from .coeffcore import Rational, poly_eval
from .invariants import (
    _local_datum_raw,
    a1_direct,
    a1_poly_in_s,
    a1_residue,
    decompose_affine_in_t,
    family_scan,
    s2_closed_form,
)
from .series import PowerSeries, ps_exp
from .zcohomology import (
    AbelianGroupDesc,
    cohomology_Mbar,
    gysin_step_matrix,
    h4_M_order,
    snf,
)


def _check_gysin_snf():
    for k in (2, 3, 4):
        spec = RingSpec(k, 1)
        for s, t in ((2, 1), (2, 3), (4, 3), (6, 5)):
            for l in range(1, 2 * k - 1):
                got = snf(gysin_step_matrix(spec, s, t, l))
                if got != (1, s * s):
                    return False, f"snf(k={k}, s={s}, t={t}, l={l}) = {got}"
    return True, "SNF = (1, s^2) for all k in {2,3,4}, (s,t) pairs, l in [1, 2k-2]"


def _check_h4_order():
    for s in (2, 4, 6):
        if h4_M_order(s) != 4 * s * s:
            return False, f"h4_M_order({s}) = {h4_M_order(s)}"
    return True, "|H^4| = 4s^2 for s in {2,4,6}"


def _check_cohomology_table():
    z = AbelianGroupDesc(1, ())
    zero = AbelianGroupDesc(0, ())
    z4 = AbelianGroupDesc(0, (4,))
    expected = [z, zero, z, zero, z4, zero, z4, z, zero, z]
    got = cohomology_Mbar(2, 2)
    if got != expected:
        return False, f"table = {[str(g) for g in got]}"
    return True, "cohomology table (k=2, s=2) = [Z, 0, Z, 0, Z_4, 0, Z_4, Z, 0, Z]"


def _check_a1_three_way():
    for k in (2, 3):
        for s in (2, 4, 6):
            direct = a1_direct(k, s)
            residue = a1_residue(k, s)
            if direct != residue:
                return False, f"direct {direct} != residue {residue} at (k={k}, s={s})"
            for c in (1, 3):
                _, affine = decompose_affine_in_t(k, c, s)
                if affine != direct:
                    return False, (
                        f"affine A1 {affine} != direct {direct} at (k={k}, c={c}, s={s})"
                    )
    return True, "a1_direct = a1_residue = affine A1 on {2,3} x {2,4,6} x {1,3}"


def _check_s2_closed_form():
    for k in range(2, 6):
        expected = Rational((-1) ** (k - 1) * k, 2 ** (k + 1))
        if s2_closed_form(k) != expected or a1_direct(k, 2) != expected:
            return False, f"k={k}: closed {s2_closed_form(k)}, direct {a1_direct(k, 2)}"
    return True, "a1_direct(k,2) = (-1)^(k-1) k/2^(k+1) for k = 2..5"


def _check_affinity():
    vals = [_local_datum_raw(2, 1, 2, t) for t in (1, 3, 5, 7)]
    diffs = [vals[i] - 2 * vals[i + 1] + vals[i + 2] for i in range(2)]
    if any(diffs):
        return False, f"second differences {diffs}"
    return True, "local datum affine in t over t in {1,3,5,7} at (k,c,s)=(2,1,2)"


def _check_family_distinct():
    result = family_scan(2, 1, 2, list(range(1, 50, 2)))
    if result.distinct_count != 25:
        return False, f"distinct_count = {result.distinct_count}"
    for entry in result.entries:
        r = entry.report
        if r is None or r.eta_rel != -2 * r.a_value:
            return False, f"bad entry at t={entry.t}"
    return True, "25 pairwise distinct eta values, eta = -2a in every row"


def _check_a1_poly():
    for k in (2, 3):
        poly = a1_poly_in_s(k)
        if poly.degree() > 2 * k - 1:
            return False, f"degree {poly.degree()} > {2 * k - 1} at k={k}"
        if any(poly[i] for i in range(0, poly.degree() + 1, 2)):
            return False, f"even-degree terms present at k={k}"
        for s in (2, 4, 6):
            if poly_eval(poly, Rational(s)) != a1_direct(k, s):
                return False, f"poly({s}) != a1_direct at k={k}"
    return True, "A1 polynomial odd of degree <= 2k-1, matches a1_direct on s in {2,4,6}"


def _check_series_engine():
    f = PowerSeries("x", [1, 0, Rational(-1, 24), 0, Rational(7, 5760)], 4)
    denom = ps_exp(Rational(1, 2), 5) - ps_exp(Rational(-1, 2), 5)
    ahat = PowerSeries.constant("x", 1, 4).divide(PowerSeries("x", denom.coeffs[1:], 4))
    if ahat != f:
        return False, f"A-hat factor = {list(ahat.coeffs)}"
    w = ps_exp(Rational(1, 2), 6, "u") - ps_exp(Rational(-1, 2), 6, "u")
    rev = w.revert()
    expected = [0, 1, 0, Rational(-1, 24), 0, Rational(3, 640), 0]
    if any(a - b for a, b in zip(rev.coeffs, expected)):
        return False, f"revert = {list(rev.coeffs)}"
    rng = random.Random(7)
    for _ in range(5):
        coeffs = [0, 1] + [Rational(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(11)]
        g = PowerSeries("x", coeffs, 12)
        if g.compose(g.revert()) != PowerSeries.identity("x", 12):
            return False, "compose(revert) != identity"
    return True, "series engine: A-hat factor, reversion, compose/revert round trips"


def _check_ring_engine():
    rng = random.Random(11)
    for k in (2, 3):
        for c in (1, 3):
            spec = RingSpec(k, c)
            u = CohClass.u(spec)
            v = CohClass.v(spec)
            top = u ** (2 * k - 1) * v
            if u ** (2 * k) != top.scale(c) or (u ** (2 * k + 1)):
                return False, f"ring relations fail at (k={k}, c={c})"
            for _ in range(50):
                xs = [
                    CohClass(
                        spec,
                        [rng.randint(-5, 5) for _ in range(2 * k)],
                        [rng.randint(-5, 5) for _ in range(2 * k)],
                    )
                    for _ in range(3)
                ]
                a, b, d = xs
                if (a * b) * d != a * (b * d) or a * b != b * a:
                    return False, f"associativity/commutativity fail at (k={k}, c={c})"
    return True, "ring engine: defining relations and randomized associativity/commutativity"


PAPER_SUITE = [
    ("gysin_cokernel_orders", _check_gysin_snf),
    ("h4_order", _check_h4_order),
    ("cohomology_table_k2_s2", _check_cohomology_table),
    ("a1_three_way_agreement", _check_a1_three_way),
    ("s2_closed_form", _check_s2_closed_form),
    ("affinity_in_t", _check_affinity),
    ("family_distinctness", _check_family_distinct),
    ("a1_polynomial_structure", _check_a1_poly),
    ("series_engine", _check_series_engine),
    ("ring_engine", _check_ring_engine),
]


def run_paper_suite(report=print) -> bool:
    """Run every criterion, print one line each; True iff all pass."""
    all_ok = True
    for name, check in PAPER_SUITE:
        ok, detail = check()
        all_ok &= ok
        report(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    return all_ok
