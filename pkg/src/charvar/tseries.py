"""Truncated formal power series in t over exact q-coefficients.

A TSeries carries its truncation order explicitly: it represents an element
of Q(q)[[t]] modulo t^(order+1).  Binary operations truncate to the smaller
order, so precision can only shrink, never silently extend.  Coefficients
are QPoly by default and may be QRatFun where a construction genuinely
introduces denominators in q.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Union

from .arith import binom2
from .qpoly import QPoly, QRatFun, ZERO, ONE, adams_q, q, ratio

Coeff = Union[QPoly, QRatFun]


def _as_coeff(c) -> Coeff:
    if isinstance(c, (QPoly, QRatFun)):
        return c
    if isinstance(c, (int, Fraction)):
        return QPoly((c,))
    raise TypeError(f"cannot use {c!r} as a series coefficient")


class TSeries:
    """Power series sum c_d t^d, d = 0..order, with exact coefficients.

    >>> f = TSeries.from_terms(3, {0: 1, 1: -1})      # 1 - t, order 3
    >>> f.inverse().coeffs == (ONE, ONE, ONE, ONE)    # geometric series
    True
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable = ()):
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = [_as_coeff(c) for c in coeffs]
        if len(cs) > order + 1:
            raise ValueError("more coefficients than the order allows")
        cs.extend([ZERO] * (order + 1 - len(cs)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TSeries is immutable")

    @staticmethod
    def from_terms(order: int, terms: dict) -> "TSeries":
        cs = [ZERO] * (order + 1)
        for d, c in terms.items():
            if d <= order:
                cs[d] = _as_coeff(c)
        return TSeries(order, cs)

    @staticmethod
    def one(order: int) -> "TSeries":
        return TSeries.from_terms(order, {0: 1})

    def coeff(self, d: int) -> Coeff:
        """Coefficient of t^d (zero beyond the truncation order)."""
        return self.coeffs[d] if d <= self.order else ZERO

    @property
    def constant(self) -> Coeff:
        return self.coeffs[0]

    def truncate(self, order: int) -> "TSeries":
        if order >= self.order:
            return self
        return TSeries(order, self.coeffs[: order + 1])

    def map_coeffs(self, fn: Callable[[Coeff], Coeff]) -> "TSeries":
        return TSeries(self.order, tuple(fn(c) for c in self.coeffs))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    # -- ring structure ------------------------------------------------------

    def __neg__(self) -> "TSeries":
        return self.map_coeffs(lambda c: -c)

    def __add__(self, other):
        if isinstance(other, (int, Fraction, QPoly, QRatFun)):
            other = TSeries.from_terms(self.order, {0: other})
        if not isinstance(other, TSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TSeries(n, tuple(self.coeffs[d] + other.coeffs[d]
                                for d in range(n + 1)))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, QPoly, QRatFun)):
            other = TSeries.from_terms(self.order, {0: other})
        if not isinstance(other, TSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QPoly, QRatFun)):
            c = _as_coeff(other)
            return self.map_coeffs(lambda x: x * c)
        if not isinstance(other, TSeries):
            return NotImplemented
        n = min(self.order, other.order)
        out = [ZERO] * (n + 1)
        for i in range(n + 1):
            ci = self.coeffs[i]
            if isinstance(ci, QPoly) and ci.is_zero:
                continue
            for j in range(n + 1 - i):
                cj = other.coeffs[j]
                if isinstance(cj, QPoly) and cj.is_zero:
                    continue
                out[i + j] = out[i + j] + ci * cj
        return TSeries(n, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TSeries":
        if n < 0:
            return self.inverse() ** (-n)
        result = TSeries.one(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def inverse(self) -> "TSeries":
        """Multiplicative inverse; requires constant term 1.

        Standard recurrence b_0 = 1, b_k = -sum_{j=1..k} c_j b_{k-j}.
        """
        if self.coeffs[0] != ONE:
            raise ValueError("series inverse needs constant term 1")
        b = [ONE] + [ZERO] * self.order
        for k in range(1, self.order + 1):
            acc = ZERO
            for j in range(1, k + 1):
                cj = self.coeffs[j]
                if isinstance(cj, QPoly) and cj.is_zero:
                    continue
                acc = acc + cj * b[k - j]
            b[k] = -acc
        return TSeries(self.order, b)

    # -- substitutions ---------------------------------------------------------

    def adams(self, n: int) -> "TSeries":
        """The n-th Adams operation: q -> q^n and t -> t^n jointly."""
        if n < 1:
            raise ValueError("adams operation needs n >= 1")
        if n == 1:
            return self
        out = [ZERO] * (self.order + 1)
        for j in range(self.order // n + 1):
            cj = self.coeffs[j]
            if not (isinstance(cj, QPoly) and cj.is_zero):
                out[j * n] = adams_q(cj, n)
        return TSeries(self.order, out)

    def qpower_twist(self, m: int, power: int) -> "TSeries":
        """Scale the t^d coefficient by q^(power*(1-m)*binom(d,2)).

        For power = -1 and m >= 1 every exponent is >= 0 and coefficients
        stay polynomial; power = +1 with m >= 2 introduces genuine
        denominators (QRatFun coefficients).
        """
        if m < 1:
            raise ValueError("m must be >= 1")
        if power not in (1, -1):
            raise ValueError("power must be +1 or -1")
        out = []
        for d, c in enumerate(self.coeffs):
            e = power * (1 - m) * binom2(d)
            if e >= 0:
                out.append(c * q ** e)
            else:
                out.append(c * ratio(ONE, q ** (-e)))
        return TSeries(self.order, out)

    def __str__(self):
        parts = []
        for d, c in enumerate(self.coeffs):
            if isinstance(c, QPoly) and c.is_zero:
                continue
            term = f"({c})" if d == 0 else f"({c})*t^{d}"
            parts.append(term)
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(t^{self.order + 1})"

    def __repr__(self):
        return f"TSeries({self})"


def series_mul(a: TSeries, b: TSeries) -> TSeries:
    return a * b


def series_inverse(a: TSeries) -> TSeries:
    return a.inverse()


def adams_t(a: TSeries, n: int) -> TSeries:
    return a.adams(n)
