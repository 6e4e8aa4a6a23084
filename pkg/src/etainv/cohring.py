"""Exact arithmetic in the rational cohomology ring Q[u,v]/(v^2, u^{2k} - c*u^{2k-1}*v).

Classes are kept in the normal form p(u) + v*q(u) with deg p, deg q <= 2k-1;
reduction by the defining relations happens eagerly in every operation, so
equality is a syntactic check.  u and v both sit in degree 2 and the top
nonzero degree is 4k, spanned by u^{2k-1}*v.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coeffcore import Rational, rat_to_str
from .series import PowerSeries

__all__ = [
    "RingSpec",
    "CohClass",
    "SpecMismatch",
    "NonNilpotentArgument",
    "InsufficientOrder",
    "coh_add",
    "coh_mul",
    "coh_eval_series",
    "coh_integrate",
]


class SpecMismatch(ValueError):
    """Operation on classes living in rings with different (k, c)."""


class NonNilpotentArgument(ValueError):
    """Series evaluation at a class with a nonzero constant part."""


class InsufficientOrder(ValueError):
    """Series truncation order too small to evaluate exactly in the ring."""


@dataclass(frozen=True)
class RingSpec:
    """Parameters (k, c) of the ring; k >= 2 and c odd are standing assumptions."""

    k: int
    c: int

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"k must be >= 2, got {self.k}")
        if self.c % 2 == 0:
            raise ValueError(f"c must be odd, got {self.c}")

    @property
    def top_u_degree(self) -> int:
        return 2 * self.k - 1


class CohClass:
    """Normal-form ring element p(u) + v*q(u).

    p and q are stored as coefficient tuples of length 2k indexed by the
    u-degree; immutable.
    """

    __slots__ = ("spec", "p", "q")

    def __init__(self, spec: RingSpec, p=(), q=()):
        n = 2 * spec.k
        p = list(p)
        q = list(q)
        if len(p) > n or len(q) > n:
            raise ValueError("coefficients exceed normal-form degree bound; reduce first")
        p += [Rational(0)] * (n - len(p))
        q += [Rational(0)] * (n - len(q))
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "p", tuple(Rational(c) for c in p))
        object.__setattr__(self, "q", tuple(Rational(c) for c in q))

    def __setattr__(self, name, value):
        raise AttributeError("CohClass is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, spec: RingSpec) -> "CohClass":
        return cls(spec)

    @classmethod
    def one(cls, spec: RingSpec) -> "CohClass":
        return cls(spec, (1,))

    @classmethod
    def u(cls, spec: RingSpec) -> "CohClass":
        return cls(spec, (0, 1))

    @classmethod
    def v(cls, spec: RingSpec) -> "CohClass":
        return cls(spec, (), (1,))

    @classmethod
    def from_uv(cls, spec: RingSpec, cu, cv) -> "CohClass":
        """The degree-2 class cu*u + cv*v."""
        return cls(spec, (0, cu), (cv,))

    @classmethod
    def reduce(cls, spec: RingSpec, p_raw, q_raw) -> "CohClass":
        """Reduce arbitrary-degree (p, q) by v^2 = 0, u^{2k} = c*u^{2k-1}*v.

        Consequently u^{2k}*v = 0 and u^m = 0 for m > 2k.
        """
        n = 2 * spec.k
        p = list(p_raw)
        q = list(q_raw)
        if len(p) > n:
            # only u^{2k} survives reduction into the v-part
            overflow = p[n]
            p = p[:n]
            if overflow:
                q += [Rational(0)] * (n - len(q))
                q[n - 1] = q[n - 1] + overflow * spec.c
        q = q[:n]
        return cls(spec, p, q)

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.p) and not any(self.q)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def constant_part(self):
        return self.p[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, CohClass):
            return NotImplemented
        return self.spec == other.spec and self.p == other.p and self.q == other.q

    def __hash__(self):
        return hash((self.spec, self.p, self.q))

    def graded_parts(self) -> dict[int, "CohClass"]:
        """Decompose into components of pure cohomological degree."""
        out: dict[int, CohClass] = {}
        for i, c in enumerate(self.p):
            if c:
                cur = out.setdefault(2 * i, CohClass.zero(self.spec))
                out[2 * i] = cur + CohClass(self.spec, [0] * i + [c])
        for i, c in enumerate(self.q):
            if c:
                deg = 2 * i + 2
                cur = out.setdefault(deg, CohClass.zero(self.spec))
                out[deg] = cur + CohClass(self.spec, (), [0] * i + [c])
        return out

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "CohClass"):
        if self.spec != other.spec:
            raise SpecMismatch(f"{self.spec} vs {other.spec}")

    def __add__(self, other: "CohClass") -> "CohClass":
        self._check(other)
        return CohClass(
            self.spec,
            (a + b for a, b in zip(self.p, other.p)),
            (a + b for a, b in zip(self.q, other.q)),
        )

    def __neg__(self) -> "CohClass":
        return CohClass(self.spec, (-c for c in self.p), (-c for c in self.q))

    def __sub__(self, other: "CohClass") -> "CohClass":
        return self + (-other)

    def scale(self, c) -> "CohClass":
        return CohClass(self.spec, (c * a for a in self.p), (c * a for a in self.q))

    def __mul__(self, other):
        if not isinstance(other, CohClass):
            return self.scale(other)
        self._check(other)
        n = 2 * self.spec.k
        # (p1 + v q1)(p2 + v q2) = p1 p2 + v (p1 q2 + q1 p2)   [v^2 = 0]
        pp = [Rational(0)] * (2 * n)
        vq = [Rational(0)] * (2 * n)
        for i, a in enumerate(self.p):
            if not a:
                continue
            for j, b in enumerate(other.p):
                if b:
                    pp[i + j] += a * b
            for j, b in enumerate(other.q):
                if b:
                    vq[i + j] += a * b
        for i, a in enumerate(self.q):
            if not a:
                continue
            for j, b in enumerate(other.p):
                if b:
                    vq[i + j] += a * b
        return CohClass.reduce(self.spec, pp, vq)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CohClass":
        if n < 0:
            raise ValueError("negative power in cohomology ring")
        result = CohClass.one(self.spec)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "k": self.spec.k,
            "c": self.spec.c,
            "p": [rat_to_str(c) for c in self.p],
            "q": [rat_to_str(c) for c in self.q],
        }

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.p):
            if c:
                terms.append(f"({rat_to_str(c)})u^{i}")
        for i, c in enumerate(self.q):
            if c:
                terms.append(f"({rat_to_str(c)})u^{i}v")
        return "CohClass(" + (" + ".join(terms) or "0") + ")"


def coh_add(a: CohClass, b: CohClass) -> CohClass:
    return a + b


def coh_mul(a: CohClass, b: CohClass) -> CohClass:
    return a * b


def coh_eval_series(f: PowerSeries, x: CohClass) -> CohClass:
    """sum_n f_n * x^n for a positive-degree class x; a finite sum by nilpotency.

    Requires order(f) >= 2k so the truncation cannot hide a surviving term.
    """
    if x.constant_part():
        raise NonNilpotentArgument("class has a nonzero constant part")
    two_k = 2 * x.spec.k
    if f.order < two_k:
        raise InsufficientOrder(
            f"series order {f.order} < 2k = {two_k}; higher terms would be lost"
        )
    acc = CohClass.one(x.spec).scale(f.coeffs[0])
    power = CohClass.one(x.spec)
    for n in range(1, min(f.order, two_k) + 1):
        power = power * x
        if not power:
            break
        cn = f.coeffs[n]
        if cn:
            acc = acc + power.scale(cn)
    return acc


def coh_integrate(a: CohClass):
    """Integration over the 4k-manifold: the coefficient of u^{2k-1}*v."""
    return a.q[2 * a.spec.k - 1]
