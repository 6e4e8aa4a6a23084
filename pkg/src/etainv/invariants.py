"""Characteristic classes, the fixed-point local datum and the relative
eta-invariant for the (4k+1)-dimensional circle-bundle quotient families.

The local datum a(k, c, s, t) is the top-degree coefficient of a four-factor
characteristic-class product in the ring Q[u,v]/(v^2, u^{2k} - c*u^{2k-1}*v);
the relative eta-invariant is -2 times that value.  As a function of t the
datum is affine, a = A0 - A1*t, and A1 is computed here along three
independent routes (ring integral, univariate series, residue after
substitution) that must agree exactly.

The sign convention: the integral carries an undetermined global sign coming
from the lift of the involution to the Spin^c structure.  We always take the
plus branch and record sign_convention = "PLUS" in every report; distinctness
and nonvanishing statements are insensitive to this choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .coeffcore import Rational, UniPoly, gcd, poly_eval, rat_to_str
from .cohring import CohClass, RingSpec, coh_eval_series, coh_integrate
from .series import PowerSeries, ps_exp

__all__ = [
    "InvalidParams",
    "AffinityViolation",
    "FamilyParams",
    "EtaReport",
    "ScanEntry",
    "ScanResult",
    "chern_total_TBc",
    "ahat_Bc",
    "local_datum_integrand",
    "local_datum",
    "relative_eta",
    "decompose_affine_in_t",
    "a1_direct",
    "a1_residue",
    "s2_closed_form",
    "a1_poly_in_s",
    "find_good_s",
    "family_scan",
    "SIGN_PLUS",
]

SIGN_PLUS = "PLUS"


class InvalidParams(ValueError):
    """Family parameters violating the standing assumptions."""


class AffinityViolation(AssertionError):
    """The local datum failed to be affine in t; indicates an implementation bug."""


@dataclass(frozen=True)
class FamilyParams:
    """Parameters (k, c, s, t) of one family member.

    Standing assumptions: k >= 2, c odd, s even and nonzero, t odd and
    coprime to s.
    """

    k: int
    c: int
    s: int
    t: int

    def __post_init__(self):
        if self.k < 2:
            raise InvalidParams(f"k must be >= 2 (standing assumption), got k={self.k}")
        if self.c % 2 == 0:
            raise InvalidParams(f"c must be odd (standing assumption), got c={self.c}")
        if self.s == 0 or self.s % 2 != 0:
            raise InvalidParams(
                f"s must be a nonzero even integer (standing assumption), got s={self.s}"
            )
        if self.t % 2 == 0:
            raise InvalidParams(f"t must be odd (standing assumption), got t={self.t}")
        if gcd(self.s, self.t) != 1:
            raise InvalidParams(
                f"s and t must be coprime (standing assumption), got gcd({self.s},{self.t})="
                f"{gcd(self.s, self.t)}"
            )

    @property
    def spec(self) -> RingSpec:
        return RingSpec(self.k, self.c)


@dataclass(frozen=True)
class EtaReport:
    """One computed family member: local datum, eta-invariant and the affine data."""

    params: FamilyParams
    a_value: object
    eta_rel: object
    A0: object
    A1: object
    sign_convention: str = SIGN_PLUS

    def to_dict(self, approx: bool = False) -> dict:
        d = {
            "k": self.params.k,
            "c": self.params.c,
            "s": self.params.s,
            "t": self.params.t,
            "a_value": rat_to_str(self.a_value),
            "eta_rel": rat_to_str(self.eta_rel),
            "A0": rat_to_str(self.A0),
            "A1": rat_to_str(self.A1),
            "sign_convention": self.sign_convention,
        }
        if approx:
            d["a_value_approx"] = float(self.a_value)
            d["eta_rel_approx"] = float(self.eta_rel)
        return d


# ---------------------------------------------------------------------------
# characteristic classes
# ---------------------------------------------------------------------------


def chern_total_TBc(spec: RingSpec) -> CohClass:
    """Total Chern class (1 + 2v) * ((1+u)^{2k} - c*v*(1+u)^{2k-1}) in normal form."""
    one = CohClass.one(spec)
    u = CohClass.u(spec)
    v = CohClass.v(spec)
    one_u = one + u
    pow_2k1 = one_u ** (2 * spec.k - 1)
    inner = pow_2k1 * one_u - v.scale(spec.c) * pow_2k1
    return (one + v.scale(2)) * inner


@lru_cache(maxsize=None)
def _ahat_factor(order: int) -> PowerSeries:
    """x / (e^{x/2} - e^{-x/2}) = 1 - x^2/24 + 7x^4/5760 - ..., truncated."""
    denom = ps_exp(Rational(1, 2), order + 1) - ps_exp(Rational(-1, 2), order + 1)
    # divide numerator and denominator by x; the shifted series is a unit
    shifted = PowerSeries("x", denom.coeffs[1:], order)
    return PowerSeries.constant("x", 1, order).divide(shifted)


@lru_cache(maxsize=None)
def _inv_two_cosh(order: int) -> PowerSeries:
    """1 / (e^{x/2} + e^{-x/2}) = 1/2 - x^2/16 + 5x^4/768 - ..., truncated."""
    denom = ps_exp(Rational(1, 2), order) + ps_exp(Rational(-1, 2), order)
    return PowerSeries.constant("x", 1, order).divide(denom)


def _default_order(k: int) -> int:
    # top degree of the ring is 4k; one even step of headroom
    return 4 * k + 2


def ahat_Bc(spec: RingSpec, order: int | None = None) -> CohClass:
    """The A-hat class of the base, via the Chern-root factorization.

    The stable splitting has formal roots 2v, u with multiplicity 2k-1, and
    u - c*v; each contributes one factor x/(e^{x/2}-e^{-x/2}).
    """
    if order is None:
        order = _default_order(spec.k)
    f = _ahat_factor(order)
    two_v = CohClass.v(spec).scale(2)
    u = CohClass.u(spec)
    u_minus_cv = CohClass.from_uv(spec, 1, -spec.c)
    return (
        coh_eval_series(f, two_v)
        * coh_eval_series(f, u) ** (2 * spec.k - 1)
        * coh_eval_series(f, u_minus_cv)
    )


def local_datum_integrand(params: FamilyParams, order: int | None = None) -> CohClass:
    """A-hat(B_c) times 1/(e^{y/2} + e^{-y/2}) at the normal Euler class y = su + tv."""
    return _integrand_raw(params.k, params.c, params.s, params.t, order)


def _integrand_raw(k: int, c: int, s: int, t: int, order: int | None = None) -> CohClass:
    spec = RingSpec(k, c)
    if order is None:
        order = _default_order(k)
    y = CohClass.from_uv(spec, s, t)
    return ahat_Bc(spec, order) * coh_eval_series(_inv_two_cosh(order), y)


def local_datum(params: FamilyParams, order: int | None = None):
    """a = + integral over the base of the four-factor product (PLUS branch)."""
    return coh_integrate(local_datum_integrand(params, order))


def _local_datum_raw(k: int, c: int, s: int, t: int, order: int | None = None):
    # affine-decomposition probes need t values that may share a factor with s;
    # the integral itself is defined for any integer t
    return coh_integrate(_integrand_raw(k, c, s, t, order))


# ---------------------------------------------------------------------------
# affine structure in t
# ---------------------------------------------------------------------------


def decompose_affine_in_t(k: int, c: int, s: int, order: int | None = None):
    """(A0, A1) with local datum = A0 - A1*t, from probes t = 1, 3, checked at t = 5."""
    a1 = _local_datum_raw(k, c, s, 1, order)
    a3 = _local_datum_raw(k, c, s, 3, order)
    a5 = _local_datum_raw(k, c, s, 5, order)
    A1 = (a1 - a3) / 2
    A0 = a1 + A1
    if a5 != A0 - A1 * 5:
        raise AffinityViolation(
            f"probes t=1,3,5 not collinear for (k={k}, c={c}, s={s}): "
            f"{a1}, {a3}, {a5}"
        )
    return A0, A1


def relative_eta(params: FamilyParams, order: int | None = None) -> EtaReport:
    """Full report: eta_rel = -2 * local datum, plus the affine decomposition."""
    a = local_datum(params, order)
    A0, A1 = decompose_affine_in_t(params.k, params.c, params.s, order)
    if a != A0 - A1 * params.t:
        raise AffinityViolation(
            f"direct local datum disagrees with affine decomposition at t={params.t}"
        )
    return EtaReport(
        params=params,
        a_value=a,
        eta_rel=Rational(-2) * a,
        A0=A0,
        A1=A1,
        sign_convention=SIGN_PLUS,
    )


# ---------------------------------------------------------------------------
# the degree-one coefficient A1, three ways
# ---------------------------------------------------------------------------


def _half(s_val):
    if isinstance(s_val, UniPoly):
        return s_val / 2
    return Rational(s_val) / 2


def _a1_series(k: int, s_val, order: int | None = None):
    """Coefficient of u^{2k-1} in the purely univariate A1 generating series.

    The series is (u/(e^{u/2}-e^{-u/2}))^{2k} * S/(2*C^2) with
    S = e^{su/2}-e^{-su/2}, C = e^{su/2}+e^{-su/2}; s_val may be a rational
    number or the generator of Q[s].
    """
    if k < 2:
        raise InvalidParams(f"k must be >= 2, got {k}")
    if order is None:
        order = 2 * k + 2
    half = _half(s_val)
    e_plus = ps_exp(half, order, "u")
    e_minus = ps_exp(-half, order, "u")
    sinh2 = e_plus - e_minus
    cosh2 = e_plus + e_minus
    t_factor = sinh2.divide((cosh2 * cosh2).scale(2))
    ahat = PowerSeries("u", _ahat_factor(order).coeffs, order)
    return (ahat ** (2 * k) * t_factor).coeff(2 * k - 1)


def a1_direct(k: int, s: int, order: int | None = None):
    """A1 as the u^{2k-1} coefficient of the univariate generating series."""
    if s == 0 or s % 2 != 0:
        raise InvalidParams(f"s must be a nonzero even integer, got s={s}")
    return _a1_series(k, s, order)


def a1_residue(k: int, s: int, order: int | None = None):
    """A1 as a residue after the substitution w = 2*sinh(u/2).

    Computes the compositional inverse u(w), substitutes into
    sinh(su/2)/(2cosh(su/2))^2 * 1/cosh(u/2), and reads the w^{2k-1}
    coefficient (the residue of w^{-2k} times that expression).
    """
    if s == 0 or s % 2 != 0:
        raise InvalidParams(f"s must be a nonzero even integer, got s={s}")
    if k < 2:
        raise InvalidParams(f"k must be >= 2, got {k}")
    if order is None:
        order = 2 * k + 2
    half = Rational(1) / 2
    w_of_u = ps_exp(half, order, "u") - ps_exp(-half, order, "u")
    u_of_w = w_of_u.revert()
    sh = _half(s)
    e_plus = ps_exp(sh, order, "u")
    e_minus = ps_exp(-sh, order, "u")
    big_s = e_plus - e_minus
    big_c = e_plus + e_minus
    cosh_u2 = (ps_exp(half, order, "u") + ps_exp(-half, order, "u")).scale(Rational(1, 2))
    integrand_u = big_s.divide((big_c * big_c).scale(2)).divide(cosh_u2)
    g = integrand_u.compose(u_of_w)
    return PowerSeries("w", g.coeffs, g.order).coeff(2 * k - 1)


def s2_closed_form(k: int):
    """A1 at s = 2: the w^{2k-2} coefficient of (1/4)/(1 + w^2/2)^2.

    Equals (-1)^{k-1} * k / 2^{k+1} by the binomial series.
    """
    if k < 2:
        raise InvalidParams(f"k must be >= 2, got {k}")
    order = 2 * k
    base = PowerSeries("w", (1, 0, Rational(1, 2)), order)
    inv = PowerSeries.constant("w", 1, order).divide(base * base)
    return inv.scale(Rational(1, 4)).coeff(2 * k - 2)


def a1_poly_in_s(k: int) -> UniPoly:
    """A1 as an exact element of Q[s]: odd, of degree <= 2k-1."""
    s_gen = UniPoly.gen("s")
    coeff = _a1_series(k, s_gen)
    if isinstance(coeff, UniPoly):
        return coeff
    return UniPoly.constant("s", coeff)


def find_good_s(k: int, s_candidates) -> list[int]:
    """Filter even nonzero candidates to those with A1(s) != 0."""
    poly = a1_poly_in_s(k)
    out = []
    for s in s_candidates:
        if s == 0 or s % 2 != 0:
            raise InvalidParams(f"candidate s={s} is not a nonzero even integer")
        if poly_eval(poly, Rational(s)):
            out.append(s)
    return out


# ---------------------------------------------------------------------------
# family sweeps
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ScanEntry:
    t: int
    report: EtaReport | None = None
    error: str | None = None


@dataclass(frozen=True)
class ScanResult:
    entries: tuple[ScanEntry, ...]
    distinct_count: int

    def to_dict(self, approx: bool = False) -> dict:
        rows = []
        for entry in self.entries:
            if entry.report is not None:
                rows.append(entry.report.to_dict(approx=approx))
            else:
                rows.append({"t": entry.t, "error": entry.error})
        return {"rows": rows, "distinct_count": self.distinct_count}


def family_scan(k: int, c: int, s: int, t_values, order: int | None = None) -> ScanResult:
    """Per-t eta reports plus the number of distinct eta values.

    Invalid t values are reported per entry and the scan continues; results
    are assembled in the order of t_values.
    """
    entries = []
    seen = set()
    for t in t_values:
        try:
            params = FamilyParams(k=k, c=c, s=s, t=t)
        except InvalidParams as exc:
            entries.append(ScanEntry(t=t, error=str(exc)))
            continue
        report = relative_eta(params, order)
        seen.add(report.eta_rel)
        entries.append(ScanEntry(t=t, report=report))
    return ScanResult(entries=tuple(entries), distinct_count=len(seen))
