"""Exact arithmetic in Q[q] and Q(q).

Dense univariate polynomials over the rationals, their quotient field, and
two change-of-basis tools used throughout the counting machinery: expansion
in powers of s = q - 1, and exact limits at q = 1 for rational functions
whose singularity there is removable.

Coefficients are stored as plain ints whenever the value is an integer and
as fractions.Fraction otherwise.  Everything here is exact; no floating
point is used anywhere in the package.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]


class ExactDivisionError(ArithmeticError):
    """Division that was required to be exact left a nonzero remainder."""


class PoleError(ArithmeticError):
    """Evaluation or limit taken at a genuine pole."""


def _norm(c: Scalar) -> Scalar:
    # collapse integral Fractions to int; keeps hashing and repr canonical
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class QPoly:
    """Immutable polynomial in q with exact rational coefficients.

    Coefficients are dense, lowest degree first, no trailing zeros; the
    zero polynomial has an empty coefficient tuple.

    >>> p = QPoly([-1, 0, 1])          # q^2 - 1
    >>> p * p == QPoly([1, 0, -2, 0, 1])
    True
    >>> p(3)
    8
    >>> str(QPoly([1, -2, 1]))
    'q^2 - 2*q + 1'
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_norm(Fraction(c) if not isinstance(c, (int, Fraction)) else c)
              for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @staticmethod
    def const(c: Scalar) -> "QPoly":
        return QPoly((c,))

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def leading(self) -> Scalar:
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    @property
    def constant(self) -> Scalar:
        return self.coeffs[0] if self.coeffs else 0

    @property
    def is_integral(self) -> bool:
        """True when every coefficient is an integer."""
        return all(isinstance(c, int) for c in self.coeffs)

    @property
    def is_scalar(self) -> bool:
        return len(self.coeffs) <= 1

    def __eq__(self, other) -> bool:
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return len(self.coeffs) <= 1 and self.constant == other
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.constant)   # consistent with scalar equality
        return hash(self.coeffs)

    # -- ring operations ---------------------------------------------------

    def __neg__(self) -> "QPoly":
        return QPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPoly((other,))
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return QPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, QPoly)):
            return self + (-other if isinstance(other, QPoly) else QPoly((-other,)))
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return ZERO
            return QPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QPoly":
        if n < 0:
            raise ValueError("negative power of a QPoly; use ratio()")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __divmod__(self, other: "QPoly"):
        if isinstance(other, (int, Fraction)):
            other = QPoly((other,))
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dn, dd = len(rem) - 1, other.degree
        if dn < dd:
            return ZERO, self
        quot = [0] * (dn - dd + 1)
        lead = other.coeffs[-1]
        for i in range(dn, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            f = _norm(Fraction(c, lead)) if lead != 1 else c
            quot[i - dd] = f
            for j, oc in enumerate(other.coeffs):
                rem[i - dd + j] -= f * oc
        return QPoly(quot), QPoly(rem)

    def divexact(self, other: "QPoly") -> "QPoly":
        """Exact quotient; raises ExactDivisionError on nonzero remainder."""
        quot, rem = divmod(self, other)
        if not rem.is_zero:
            raise ExactDivisionError(f"({self}) is not divisible by ({other})")
        return quot

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero scalar")
            inv = Fraction(1, 1) / other
            return QPoly(tuple(c * inv for c in self.coeffs))
        if isinstance(other, QPoly):
            return ratio(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return ratio(QPoly((other,)), self)
        return NotImplemented

    # -- evaluation and substitution ----------------------------------------

    def evaluate(self, x: Scalar) -> Scalar:
        """Exact value at q = x (Horner)."""
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _norm(acc)

    __call__ = evaluate

    def adams(self, n: int) -> "QPoly":
        """Substitute q -> q^n, n >= 1."""
        if n < 1:
            raise ValueError("adams operation needs n >= 1")
        if n == 1 or self.is_zero:
            return self
        out = [0] * (self.degree * n + 1)
        for i, c in enumerate(self.coeffs):
            out[i * n] = c
        return QPoly(out)

    # -- display -------------------------------------------------------------

    def __str__(self) -> str:
        return poly_str(self)

    def __repr__(self) -> str:
        return f"QPoly({poly_str(self)})"


ZERO = QPoly()
ONE = QPoly((1,))
q = QPoly((0, 1))


def poly_str(p: QPoly, var: str = "q") -> str:
    """Human-readable form, highest degree first: 'q^3 - 2*q + 1'."""
    if p.is_zero:
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if k == 0:
            body = str(mag)
        else:
            head = "" if mag == 1 else f"{mag}*"
            body = f"{head}{var}" if k == 1 else f"{head}{var}^{k}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def _as_qpoly(x) -> QPoly:
    if isinstance(x, QPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return QPoly((x,))
    raise TypeError(f"cannot coerce {x!r} to QPoly")


def poly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """Monic gcd over the rationals (Euclid; remainders kept monic)."""
    a, b = _as_qpoly(a), _as_qpoly(b)
    while not b.is_zero:
        lead = b.leading
        if lead != 1:
            b = b / lead
        a, b = b, divmod(a, b)[1]
    if a.is_zero:
        return ZERO
    return a / a.leading if a.leading != 1 else a


class QRatFun:
    """Reduced rational function num/den in q.

    Invariants: den is monic of degree >= 1 and gcd(num, den) = 1.  Values
    that reduce to polynomials are represented as QPoly instead; use the
    ratio() factory, which enforces this, rather than the raw constructor.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: QPoly, den: QPoly):
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("QRatFun is immutable")

    @property
    def is_zero(self) -> bool:
        return False          # zero reduces to QPoly

    def __eq__(self, other) -> bool:
        if isinstance(other, QRatFun):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (QPoly, int, Fraction)):
            return False      # canonical form: would have been demoted
        return NotImplemented

    def __hash__(self):
        return hash((self.num.coeffs, self.den.coeffs))

    def __neg__(self):
        return QRatFun(-self.num, self.den)

    def __add__(self, other):
        if isinstance(other, (int, Fraction, QPoly)):
            other = _as_qpoly(other)
            return ratio(self.num + other * self.den, self.den)
        if isinstance(other, QRatFun):
            return ratio(self.num * other.den + other.num * self.den,
                         self.den * other.den)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        neg = -other if isinstance(other, (QPoly, QRatFun)) else -_as_qpoly(other)
        return self + neg

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QPoly)):
            return ratio(self.num * _as_qpoly(other), self.den)
        if isinstance(other, QRatFun):
            return ratio(self.num * other.num, self.den * other.den)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, QPoly)):
            return ratio(self.num, self.den * _as_qpoly(other))
        if isinstance(other, QRatFun):
            return ratio(self.num * other.den, self.den * other.num)
        return NotImplemented

    def __rtruediv__(self, other):
        return ratio(_as_qpoly(other) * self.den, self.num)

    def __pow__(self, n: int):
        if n == 0:
            return ONE
        if n < 0:
            return ratio(self.den ** (-n), self.num ** (-n))
        return ratio(self.num ** n, self.den ** n)

    def evaluate(self, x: Scalar) -> Scalar:
        dv = self.den.evaluate(x)
        if dv == 0:
            raise PoleError(f"pole at q = {x}")   # reduced, so num(x) != 0
        return _norm(Fraction(self.num.evaluate(x)) / dv)

    __call__ = evaluate

    def adams(self, n: int) -> "QRatFun":
        # reducedness and monic den survive q -> q^n
        return QRatFun(self.num.adams(n), self.den.adams(n))

    def __str__(self):
        return f"({poly_str(self.num)})/({poly_str(self.den)})"

    def __repr__(self):
        return f"QRatFun({self})"


def ratio(num, den=ONE):
    """num/den as a canonical QPoly (when polynomial) or QRatFun."""
    num, den = _as_qpoly(num), _as_qpoly(den)
    if den.is_zero:
        raise ZeroDivisionError("zero denominator")
    if num.is_zero:
        return ZERO
    g = poly_gcd(num, den)
    if g.degree > 0:
        num, den = num.divexact(g), den.divexact(g)
    lead = den.leading
    if lead != 1:
        num, den = num / lead, den / lead
    if den.degree == 0:
        return num
    return QRatFun(num, den)


QValue = Union[QPoly, QRatFun]


def adams_q(f: QValue, n: int) -> QValue:
    """Substitute q -> q^n in a polynomial or rational function."""
    if n < 1:
        raise ValueError("adams operation needs n >= 1")
    return f.adams(n)


def expand_in_s(p: QPoly) -> list:
    """Coefficients c_0..c_k with p = sum c_k (q-1)^k.

    Repeated synthetic division by (q - 1); exact.  The zero polynomial
    yields an empty list.

    >>> expand_in_s(QPoly([1, -2, 1]))   # (q-1)^2
    [0, 0, 1]
    """
    a = list(p.coeffs)
    out = []
    while a:
        if len(a) == 1:
            out.append(_norm(a[0]))
            break
        b = [0] * (len(a) - 1)
        b[-1] = a[-1]
        for i in range(len(a) - 2, 0, -1):
            b[i - 1] = a[i] + b[i]
        out.append(_norm(a[0] + b[0]))
        a = b
    return out


def from_s_coeffs(cs: Iterable[Scalar]) -> QPoly:
    """Reassemble sum c_k (q-1)^k from its coefficient list."""
    s = q - 1
    p = ZERO
    for c in reversed(list(cs)):
        p = p * s + QPoly((c,))
    return p


def _q1_valuation(p: QPoly):
    # p = (q-1)^k * p1 with p1(1) != 0; requires p nonzero
    k = 0
    qm1 = q - 1
    while p.evaluate(1) == 0:
        p = p.divexact(qm1)
        k += 1
    return k, p


def limit_at_1(f: QValue) -> Scalar:
    """Exact limit of f(q) as q -> 1.

    Polynomials evaluate directly.  For rational functions the common
    (q-1)-power of numerator and denominator is cancelled first; a genuine
    pole raises PoleError.
    """
    if isinstance(f, (int, Fraction)):
        return _norm(f)
    if isinstance(f, QPoly):
        return f.evaluate(1)
    if f.num.is_zero:
        return 0
    vn, num1 = _q1_valuation(f.num)
    vd, den1 = _q1_valuation(f.den)
    if vn < vd:
        raise PoleError(f"pole of order {vd - vn} at q = 1")
    if vn > vd:
        return 0
    return _norm(Fraction(num1.evaluate(1)) / den1.evaluate(1))
