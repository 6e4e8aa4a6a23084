"""Truncated formal power series over an exact coefficient ring.

A series carries its variable tag and an explicit truncation order N; the
coefficient list always has exactly N+1 entries and no operation ever reports
a coefficient beyond the truncation.  Coefficients may be rationals or
:class:`~etainv.coeffcore.UniPoly` values, so the same engine runs over Q and
over Q[s].  Mixed-order arithmetic truncates to the minimum order.
"""

from __future__ import annotations

import math

from .coeffcore import Rational, UniPoly

__all__ = [
    "PowerSeries",
    "VariableMismatch",
    "NonUnitConstantTerm",
    "NonzeroConstantInner",
    "NotReversible",
    "OrderExceeded",
    "ps_exp",
    "ps_arith",
    "ps_div",
    "ps_compose",
    "ps_revert",
    "ps_coeff",
]


class VariableMismatch(ValueError):
    """Arithmetic between series in different variables."""


class NonUnitConstantTerm(ZeroDivisionError):
    """Series division by a series whose constant term is not a unit."""


class NonzeroConstantInner(ValueError):
    """Composition with an inner series having a nonzero constant term."""


class NotReversible(ValueError):
    """Reversion of a series without a unit linear term (or nonzero f(0))."""


class OrderExceeded(IndexError):
    """Coefficient request beyond the truncation order."""


def _is_unit(c) -> bool:
    if isinstance(c, UniPoly):
        return c.is_constant() and bool(c)
    return bool(c)


def _inv_unit(c):
    if isinstance(c, UniPoly):
        if not _is_unit(c):
            raise NonUnitConstantTerm("constant term is not a unit of Q[%s]" % c.variable)
        return UniPoly.constant(c.variable, 1 / c.constant_value())
    if not c:
        raise NonUnitConstantTerm("constant term is zero")
    return Rational(1) / c


class PowerSeries:
    """f = sum_{n=0}^{order} coeffs[n] * variable^n, exact."""

    __slots__ = ("variable", "order", "coeffs")

    def __init__(self, variable: str, coeffs, order: int | None = None):
        cs = list(coeffs)
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        cs = cs[: order + 1]
        cs += [0] * (order + 1 - len(cs))
        object.__setattr__(self, "variable", variable)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("PowerSeries is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, variable: str, value, order: int) -> "PowerSeries":
        return cls(variable, (value,), order)

    @classmethod
    def identity(cls, variable: str, order: int) -> "PowerSeries":
        """The series f(x) = x."""
        return cls(variable, (0, 1), order)

    # -- access ------------------------------------------------------------

    def coeff(self, n: int):
        """The exact coefficient of variable^n; OrderExceeded past truncation."""
        if n < 0:
            raise OrderExceeded(f"negative degree {n}")
        if n > self.order:
            raise OrderExceeded(f"degree {n} exceeds truncation order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "PowerSeries":
        if order >= self.order:
            return self
        return PowerSeries(self.variable, self.coeffs, order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        if self.variable != other.variable:
            return False
        n = min(self.order, other.order)
        return all(
            not (self.coeffs[i] - other.coeffs[i]) for i in range(n + 1)
        ) and self.order == other.order

    def __hash__(self):
        return hash((self.variable, self.order, self.coeffs))

    # -- ring arithmetic ---------------------------------------------------

    def _align(self, other: "PowerSeries") -> int:
        if self.variable != other.variable:
            raise VariableMismatch(
                f"series in {self.variable!r} vs {other.variable!r}"
            )
        return min(self.order, other.order)

    def __add__(self, other):
        if not isinstance(other, PowerSeries):
            return self.shift_const(other)
        n = self._align(other)
        return PowerSeries(
            self.variable, (self.coeffs[i] + other.coeffs[i] for i in range(n + 1)), n
        )

    __radd__ = __add__

    def shift_const(self, c) -> "PowerSeries":
        cs = list(self.coeffs)
        cs[0] = cs[0] + c
        return PowerSeries(self.variable, cs, self.order)

    def __neg__(self):
        return PowerSeries(self.variable, (-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        if not isinstance(other, PowerSeries):
            return self.shift_const(-other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self).shift_const(other)

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return self.scale(other)
        n = self._align(other)
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return PowerSeries(self.variable, out, n)

    __rmul__ = __mul__

    def scale(self, c) -> "PowerSeries":
        return PowerSeries(self.variable, (c * a for a in self.coeffs), self.order)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative series power; use divide")
        result = PowerSeries.constant(self.variable, 1, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divide(self, other: "PowerSeries") -> "PowerSeries":
        """h with h * other = self to the common truncation order.

        Requires other(0) to be a unit of the coefficient ring.
        """
        n = self._align(other)
        g0_inv = _inv_unit(other.coeffs[0])
        out = []
        for m in range(n + 1):
            acc = self.coeffs[m]
            for i in range(m):
                gi = other.coeffs[m - i]
                if gi and out[i]:
                    acc = acc - out[i] * gi
            out.append(acc * g0_inv)
        return PowerSeries(self.variable, out, n)

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        """self(inner), exact to min(self.order, inner.order); inner(0) must vanish."""
        if inner.coeffs[0]:
            raise NonzeroConstantInner("inner series has a nonzero constant term")
        n = min(self.order, inner.order)
        g = inner.truncate(n)
        # Horner in the outer variable; truncation keeps every step O(n^2)
        acc = PowerSeries.constant(g.variable, self.coeffs[n], n)
        for m in range(n - 1, -1, -1):
            acc = acc * g + self.coeffs[m]
        return acc

    def revert(self) -> "PowerSeries":
        """Compositional inverse g with self(g) = id, by Lagrange inversion.

        Requires f(0) = 0 and a unit linear coefficient.
        """
        if self.order < 1 or self.coeffs[0]:
            raise NotReversible("series must have zero constant term")
        if not _is_unit(self.coeffs[1]):
            raise NotReversible("linear coefficient must be a unit")
        n = self.order
        # self = x * h with h(0) a unit; q = 1/h, g_m = [x^{m-1}] q^m / m
        h = PowerSeries(self.variable, self.coeffs[1:], n - 1)
        one = PowerSeries.constant(self.variable, 1, h.order)
        q = one.divide(h)
        out = [0, q.coeffs[0]]
        power = q
        for m in range(2, n + 1):
            power = power * q
            c = power.coeffs[m - 1]
            out.append(c / m if c else 0)
        return PowerSeries(self.variable, out, n)

    def __repr__(self):
        return f"PowerSeries({self.variable!r}, {list(self.coeffs)!r})"

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        from .coeffcore import rat_to_str

        def enc(c):
            if isinstance(c, UniPoly):
                return c.to_strings()
            return rat_to_str(c)

        return {
            "variable": self.variable,
            "order": self.order,
            "coeffs": [enc(c) for c in self.coeffs],
        }


def ps_exp(a, order: int, variable: str = "x") -> PowerSeries:
    """exp(a*x) truncated: sum_{n<=order} a^n x^n / n!."""
    if order < 0:
        raise ValueError("order must be >= 0")
    if not isinstance(a, UniPoly):
        a = Rational(a)
    coeffs = [1]
    num = 1
    for n in range(1, order + 1):
        num = num * a
        coeffs.append(num / math.factorial(n))
    return PowerSeries(variable, coeffs, order)


def ps_arith(kind: str, f: PowerSeries, g) -> PowerSeries:
    """Dispatch {add, sub, mul, scale}; scale takes a coefficient for g."""
    if kind == "add":
        return f + g
    if kind == "sub":
        return f - g
    if kind == "mul":
        return f * g
    if kind == "scale":
        return f.scale(g)
    raise ValueError(f"unknown series operation {kind!r}")


def ps_div(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    return f.divide(g)


def ps_compose(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    return f.compose(g)


def ps_revert(f: PowerSeries) -> PowerSeries:
    return f.revert()


def ps_coeff(f: PowerSeries, n: int):
    return f.coeff(n)
