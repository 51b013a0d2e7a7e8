"""Counting polynomials of GL_d- and PGL_d-character varieties of free groups.

For the free group on m generators and a finite field with q elements, the
generating series built here count, per dimension d:

    rep_series      isomorphism classes of semisimple d-dimensional
                    representations (coefficient A_d of the JSON tables),
    abs_irr_series  absolutely irreducible classes,
    abs_ind_series  absolutely indecomposable classes,
    orbit_series    all conjugation orbits on m-tuples of invertible
                    matrices (coefficient M_d).

The first two arise from the series with t^d-coefficient
prod_{i<=d}(q^i-1)^(m-1) by series inversion, a triangular q-power twist,
and a plethystic power or logarithm; the last two from the partition-indexed
centralizer weights r_lambda by the same plethystic operations with
exponent q-1.  All four have integer coefficients, which is enforced, not
assumed.  Specializing q = uv gives E-polynomials of the corresponding
complex character varieties; exact limits at q = 1 of the PGL_d
E-polynomials give their Euler characteristics.  The semisimple counts are
certified nonnegative in the basis of powers of s = q-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple

from .arith import partitions
from .plethystic import Log, Pow
from .qpoly import (
    QPoly, ONE, ZERO, expand_in_s, limit_at_1, poly_str, q, ratio,
)
from .tseries import TSeries


class IntegralityError(ArithmeticError):
    """A counting polynomial came out with non-integer coefficients."""


def default_dmax(m: int) -> int:
    """Default table depth: 6 for m <= 3, 4 for larger m."""
    return 6 if m <= 3 else 4


def _check_m(m: int) -> None:
    if m < 1:
        raise ValueError("the free group needs at least one generator (m >= 1)")


@lru_cache(maxsize=None)
def qpochhammer_series(m: int, order: int) -> TSeries:
    """Series with t^d-coefficient (prod_{i=1..d}(q^i - 1))^(m-1)."""
    _check_m(m)
    poch = ONE
    coeffs = [ONE]
    for d in range(1, order + 1):
        poch = poch * (q ** d - 1)
        coeffs.append(poch ** (m - 1))
    return TSeries(order, coeffs)


@lru_cache(maxsize=None)
def _twisted_inverse(m: int, order: int) -> TSeries:
    # invert, then scale t^d by q^((m-1) binom(d,2)); the t^d-coefficient
    # becomes a polynomial of degree (m-1) d^2 related to |GL_d|^(m-1)
    return qpochhammer_series(m, order).inverse().qpower_twist(m, -1)


def _certified_integral(f: TSeries, what: str) -> TSeries:
    for d, c in enumerate(f.coeffs):
        if not (isinstance(c, QPoly) and c.is_integral):
            raise IntegralityError(
                f"{what}: coefficient of t^{d} is not an integer polynomial: {c}")
    return f


@lru_cache(maxsize=None)
def rep_series(m: int, order: int) -> TSeries:
    """Sum over d of A_d(q) t^d: semisimple representation counts."""
    return _certified_integral(
        Pow(_twisted_inverse(m, order), 1 - q), "semisimple counts")


@lru_cache(maxsize=None)
def abs_irr_series(m: int, order: int) -> TSeries:
    """Sum over d >= 1 of the absolutely irreducible counts times t^d."""
    return _certified_integral(
        Log(_twisted_inverse(m, order)) * (1 - q), "absolutely irreducible counts")


@lru_cache(maxsize=None)
def centralizer_weight(lam: Tuple[int, ...]) -> QPoly:
    """The partition weight r_lambda = prod_n q^(lambda_n^2) (q^-1)_(lambda_n - lambda_n+1).

    With (q^-1)_k = (1 - q^-1)...(1 - q^-k); the q-powers always clear the
    denominators, so the result is an honest polynomial.

    >>> centralizer_weight((1,)) == q - 1
    True
    >>> centralizer_weight((2,)) == q * (q - 1) * (q ** 2 - 1)
    True
    """
    out = ONE
    for n, part in enumerate(lam):
        nxt = lam[n + 1] if n + 1 < len(lam) else 0
        k = part - nxt
        # q^(part^2) * prod_{j<=k}(1 - q^-j) = q^(part^2 - k(k+1)/2) * prod (q^j - 1)
        shift = part * part - k * (k + 1) // 2
        factor = q ** shift
        for j in range(1, k + 1):
            factor = factor * (q ** j - 1)
        out = out * factor
    return out


@lru_cache(maxsize=None)
def class_weight_series(m: int, order: int) -> TSeries:
    """Sum over partitions of r_lambda^(m-1) t^(size of lambda).

    The t^d-coefficient is the number of conjugacy-class-tuples weighted by
    centralizer orders; feeding it to Pow(. , q-1) counts all conjugation
    orbits on m-tuples of invertible d x d matrices.
    """
    _check_m(m)
    coeffs = []
    for d in range(order + 1):
        acc = ZERO
        for lam in partitions(d):
            acc = acc + centralizer_weight(lam) ** (m - 1)
        coeffs.append(acc)
    return TSeries(order, coeffs)


@lru_cache(maxsize=None)
def orbit_series(m: int, order: int) -> TSeries:
    """Sum over d of M_d(q) t^d: all conjugation orbits on m-tuples."""
    return _certified_integral(
        Pow(class_weight_series(m, order), q - 1), "orbit counts")


@lru_cache(maxsize=None)
def abs_ind_series(m: int, order: int) -> TSeries:
    """Sum over d >= 1 of the absolutely indecomposable counts times t^d."""
    return _certified_integral(
        Log(class_weight_series(m, order)) * (q - 1),
        "absolutely indecomposable counts")


def rep_counts(m: int, dmax: int) -> list:
    """[A_0..A_dmax] as integer polynomials."""
    return list(rep_series(m, dmax).coeffs)


def abs_irr_counts(m: int, dmax: int) -> list:
    return list(abs_irr_series(m, dmax).coeffs)


def abs_ind_counts(m: int, dmax: int) -> list:
    return list(abs_ind_series(m, dmax).coeffs)


def orbit_counts(m: int, dmax: int) -> list:
    return list(orbit_series(m, dmax).coeffs)


# -- E-polynomials and Euler characteristics ---------------------------------


def e_polynomial(m: int, d: int, group: str = "GL", variant: str = "full",
                 dmax: int = None) -> QPoly:
    """E-polynomial of the character variety, in the product variable uv.

    The counting polynomials depend on u, v only through uv, so the result
    is returned as a QPoly whose variable stands for the product uv (render
    with uv_str).  group "GL" gives the count itself; "PGL" divides by
    (q-1)^m exactly, which needs m >= 2.  variant "full" uses the
    semisimple count, "irr" the absolutely irreducible one.
    """
    _check_m(m)
    if group not in ("GL", "PGL"):
        raise ValueError(f"unknown group {group!r}")
    if variant not in ("full", "irr"):
        raise ValueError(f"unknown variant {variant!r}")
    order = dmax if dmax is not None else d
    series = rep_series(m, order) if variant == "full" else abs_irr_series(m, order)
    p = series.coeff(d)
    if group == "PGL":
        if m < 2:
            raise ValueError("PGL E-polynomials need m >= 2")
        p = p.divexact((q - 1) ** m)
    return p


def uv_str(p: QPoly) -> str:
    """Render a polynomial in the product variable as monomials in u, v.

    >>> uv_str(q ** 2 - 2 * q + 1)
    'u^2*v^2 - 2*u*v + 1'
    """
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
            uv = "u*v" if k == 1 else f"u^{k}*v^{k}"
            body = f"{head}{uv}"
        parts.append((sign, body))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def euler_characteristics(m: int, d: int, dmax: int = None):
    """(chi, chi_irr) of the PGL_d character varieties, m >= 2.

    Computed as exact q -> 1 limits of A_d/(q-1)^m and the absolutely
    irreducible analogue, i.e. as E-polynomial values at u = v = 1.
    """
    if m < 2:
        raise ValueError("Euler characteristics need m >= 2")
    order = dmax if dmax is not None else d
    denom = (q - 1) ** m
    chi = limit_at_1(ratio(rep_series(m, order).coeff(d), denom))
    chi_irr = limit_at_1(ratio(abs_irr_series(m, order).coeff(d), denom))
    return chi, chi_irr


# -- positivity certification -------------------------------------------------


def s_positive(p: QPoly) -> bool:
    """True when p lies in N[q-1]: nonnegative integers in the s-basis."""
    return all(isinstance(c, int) and c >= 0 for c in expand_in_s(p))


@dataclass(frozen=True)
class PositivityReport:
    m: int
    dmax: int
    rows: tuple                 # (d, s_coeffs tuple, positive bool)
    irr_witness: Optional[tuple]  # (d, k, coefficient) or None

    @property
    def all_positive(self) -> bool:
        return all(ok for _, _, ok in self.rows)


def positivity_report(m: int, dmax: int) -> PositivityReport:
    """s-basis expansion of every A_d plus the first negative s-coefficient
    found among the absolutely irreducible counts (None if there is none)."""
    _check_m(m)
    reps = rep_counts(m, dmax)
    rows = []
    for d in range(1, dmax + 1):
        cs = expand_in_s(reps[d])
        ok = all(isinstance(c, int) and c >= 0 for c in cs)
        rows.append((d, tuple(cs), ok))
    witness = None
    for d, p in enumerate(abs_irr_counts(m, dmax)):
        if d == 0:
            continue
        for k, c in enumerate(expand_in_s(p)):
            if c < 0:
                witness = (d, k, c)
                break
        if witness:
            break
    return PositivityReport(m=m, dmax=dmax, rows=tuple(rows), irr_witness=witness)


# -- assembled tables ----------------------------------------------------------


@dataclass(frozen=True)
class TableRow:
    d: int
    rep_count: QPoly            # A_d
    abs_irr: QPoly              # absolutely irreducible count
    abs_ind: QPoly              # absolutely indecomposable count
    orbits: QPoly               # M_d
    chi_pgl: Optional[Fraction]
    chi_pgl_irr: Optional[Fraction]
    s_coeffs: tuple
    positive: bool


@dataclass(frozen=True)
class CharVarTable:
    m: int
    dmax: int
    rows: tuple

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "rows": [
                {
                    "d": row.d,
                    "A": [str(c) for c in row.rep_count.coeffs],
                    "A_irr": [str(c) for c in row.abs_irr.coeffs],
                    "A_ind": [str(c) for c in row.abs_ind.coeffs],
                    "M": [str(c) for c in row.orbits.coeffs],
                    "chi_pgl": None if row.chi_pgl is None else str(row.chi_pgl),
                    "chi_pgl_irr":
                        None if row.chi_pgl_irr is None else str(row.chi_pgl_irr),
                    "s_coeffs_A": [str(c) for c in row.s_coeffs],
                    "positive": row.positive,
                }
                for row in self.rows
            ],
        }


def build_table(m: int, dmax: int = None, order: int = None) -> CharVarTable:
    """Full table for d = 1..dmax; coefficient lists are the JSON contract."""
    _check_m(m)
    if dmax is None:
        dmax = default_dmax(m)
    if order is None:
        order = dmax
    if order < dmax:
        raise ValueError("truncation order must cover dmax")
    reps = rep_series(m, order)
    irrs = abs_irr_series(m, order)
    inds = abs_ind_series(m, order)
    orbs = orbit_series(m, order)
    rows = []
    for d in range(1, dmax + 1):
        a = reps.coeff(d)
        cs = tuple(expand_in_s(a))
        if m >= 2:
            chi, chi_irr = euler_characteristics(m, d, dmax=order)
        else:
            chi = chi_irr = None
        rows.append(TableRow(
            d=d,
            rep_count=a,
            abs_irr=irrs.coeff(d),
            abs_ind=inds.coeff(d),
            orbits=orbs.coeff(d),
            chi_pgl=chi,
            chi_pgl_irr=chi_irr,
            s_coeffs=cs,
            positive=all(isinstance(c, int) and c >= 0 for c in cs),
        ))
    return CharVarTable(m=m, dmax=dmax, rows=tuple(rows))


__all__ = [
    "IntegralityError", "CharVarTable", "TableRow", "PositivityReport",
    "default_dmax", "qpochhammer_series", "rep_series", "abs_irr_series",
    "abs_ind_series", "orbit_series", "class_weight_series",
    "centralizer_weight", "rep_counts", "abs_irr_counts", "abs_ind_counts",
    "orbit_counts", "e_polynomial", "uv_str", "euler_characteristics",
    "s_positive", "positivity_report", "build_table", "poly_str",
]
