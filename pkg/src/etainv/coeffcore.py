"""Exact rational and univariate polynomial arithmetic.

Rationals are arbitrary precision and always kept in lowest terms with a
positive denominator.  The backend is selected at import time: gmpy2's
compiled ``mpq`` when available (much faster big-integer gcd), otherwise the
stdlib ``fractions.Fraction``.  Set ``ETAINV_RATIONAL=fraction`` or
``ETAINV_RATIONAL=gmpy2`` to force a choice; see
``benchmarks/bench_rational_backends.py`` for a comparison.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction

__all__ = [
    "Rational",
    "RATIONAL_BACKEND",
    "DivisionByZero",
    "gcd",
    "rat_op",
    "rat_to_str",
    "rat_from_str",
    "UniPoly",
]


def _pick_backend():
    choice = os.environ.get("ETAINV_RATIONAL", "auto").lower()
    if choice not in ("auto", "gmpy2", "fraction"):
        raise ValueError(f"ETAINV_RATIONAL must be 'gmpy2' or 'fraction', got {choice!r}")
    if choice in ("auto", "gmpy2"):
        try:
            from gmpy2 import mpq
            return mpq, "gmpy2"
        except ImportError:
            if choice == "gmpy2":
                raise
    return Fraction, "fraction"


Rational, RATIONAL_BACKEND = _pick_backend()


class DivisionByZero(ZeroDivisionError):
    """Division of a rational by zero."""


def gcd(a: int, b: int) -> int:
    """Greatest common divisor, nonnegative; gcd(0, 0) = 0."""
    return math.gcd(a, b)


def rat_op(kind: str, a, b):
    """Dispatch one exact rational operation; kind in {add, sub, mul, div}."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        if not b:
            raise DivisionByZero("rational division by zero")
        return a / b
    raise ValueError(f"unknown rational operation {kind!r}")


def rat_to_str(q) -> str:
    """Serialize as 'num/den' in lowest terms, e.g. '3/1' for the integer 3."""
    return f"{q.numerator}/{q.denominator}"


def rat_from_str(text: str):
    num, _, den = text.partition("/")
    if den == "":
        den = "1"
    d = int(den)
    if d == 0:
        raise DivisionByZero(f"zero denominator in {text!r}")
    return Rational(int(num), d)


def _is_scalar(x) -> bool:
    # ints, Fractions and gmpy2.mpq all carry the numerator/denominator protocol
    return not isinstance(x, UniPoly) and hasattr(x, "denominator")


class UniPoly:
    """Univariate polynomial over Q, coefficients indexed by degree.

    Canonical form: no trailing zero coefficients (the zero polynomial has an
    empty coefficient tuple).  Instances are immutable.
    """

    __slots__ = ("variable", "coeffs")

    def __init__(self, variable: str, coeffs=()):
        raw = list(coeffs)
        if not all(_is_scalar(c) for c in raw):
            raise TypeError("UniPoly coefficients must be rational numbers")
        cs = [Rational(c) for c in raw]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "variable", variable)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, variable: str, value) -> "UniPoly":
        return cls(variable, (value,))

    @classmethod
    def gen(cls, variable: str) -> "UniPoly":
        """The polynomial consisting of the variable itself."""
        return cls(variable, (0, 1))

    # -- structure ---------------------------------------------------------

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self):
        return self.coeffs[0] if self.coeffs else Rational(0)

    def __getitem__(self, degree: int):
        if 0 <= degree < len(self.coeffs):
            return self.coeffs[degree]
        return Rational(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.variable == other.variable and self.coeffs == other.coeffs
        if _is_scalar(other):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        return hash((self.variable, self.coeffs))

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            if other.variable != self.variable:
                raise ValueError(
                    f"variable mismatch: {self.variable!r} vs {other.variable!r}"
                )
            return other
        if _is_scalar(other):
            return UniPoly.constant(self.variable, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.variable, (self[i] + other[i] for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(self.variable, (-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self or not other:
            return UniPoly(self.variable)
        out = [Rational(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(self.variable, out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if not _is_scalar(scalar):
            return NotImplemented
        if not scalar:
            raise DivisionByZero("polynomial division by zero scalar")
        return UniPoly(self.variable, (c / scalar for c in self.coeffs))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = UniPoly.constant(self.variable, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        """Evaluate by Horner's rule at a rational point."""
        acc = Rational(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- serialization -----------------------------------------------------

    def to_strings(self) -> list[str]:
        """Ordered coefficient array of 'num/den' strings."""
        return [rat_to_str(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, variable: str, strings) -> "UniPoly":
        return cls(variable, (rat_from_str(s) for s in strings))

    def __repr__(self):
        if not self.coeffs:
            return f"UniPoly({self.variable!r}, 0)"
        terms = " + ".join(
            f"({rat_to_str(c)})*{self.variable}^{i}" for i, c in enumerate(self.coeffs) if c
        )
        return f"UniPoly({terms})"


def poly_eval(p: UniPoly, x):
    """Exact value of p at x (ring homomorphism Q[var] -> Q)."""
    return p(x)
