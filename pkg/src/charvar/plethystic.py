"""Plethystic calculus on truncated series.

The operators here act on TSeries over exact q-coefficients:

    psi_n   : q -> q^n, t -> t^n                       (Adams operation)
    Psi     = sum_{n>=1} psi_n / n
    Psi_inv = sum_{n>=1} mu(n) psi_n / n
    Exp     = exp . Psi          (plethystic exponential)
    Log     = Psi_inv . log      (plethystic logarithm)
    Pow(f, g)        = Exp(g * Log(f))
    pow_scalar(f, g) = exp(g * log(f))   (ordinary scalar power)

Exp and Log are mutually inverse bijections between series with zero
constant term and series with constant term 1, and Exp(f+g) = Exp(f)Exp(g).

Pow(f, 1-q) also has a product expansion over Adams images,

    Pow(f, 1-q) = prod_{d>=1} psi_d(f)^(-Phi_d(q)),

where Phi_d(q) = (1/d) sum_{e|d} mu(d/e) (q^e - 1) counts monic irreducible
degree-d polynomials over a field with q elements that have nonzero
constant term.  pow_product implements the right-hand side.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .arith import divisors, mobius
from .qpoly import QPoly, QRatFun, ZERO, ONE, q
from .tseries import TSeries

ScalarLike = Union[int, Fraction, QPoly, QRatFun]


def _is_zero_coeff(c) -> bool:
    return isinstance(c, QPoly) and c.is_zero


def _require_zero_constant(f: TSeries, who: str) -> None:
    if not _is_zero_coeff(f.constant):
        raise ValueError(f"{who} needs a series with zero constant term")


def _require_unit_constant(f: TSeries, who: str) -> None:
    if f.constant != ONE:
        raise ValueError(f"{who} needs a series with constant term 1")


def psi(f: TSeries) -> TSeries:
    """Psi = sum_{n>=1} psi_n/n applied to a series without constant term."""
    _require_zero_constant(f, "Psi")
    acc = TSeries(f.order)
    for n in range(1, f.order + 1):
        acc = acc + f.adams(n) * Fraction(1, n)
    return acc


def psi_inv(f: TSeries) -> TSeries:
    """Inverse of Psi: sum_{n>=1} mu(n) psi_n / n."""
    _require_zero_constant(f, "Psi_inv")
    acc = TSeries(f.order)
    for n in range(1, f.order + 1):
        mu = mobius(n)
        if mu:
            acc = acc + f.adams(n) * Fraction(mu, n)
    return acc


def series_exp(f: TSeries) -> TSeries:
    """Ordinary exp of a series with zero constant term.

    Recurrence n*g_n = sum_{k=1..n} k f_k g_{n-k}, from g' = f' g.
    """
    _require_zero_constant(f, "series_exp")
    g = [ONE] + [ZERO] * f.order
    for n in range(1, f.order + 1):
        acc = ZERO
        for k in range(1, n + 1):
            fk = f.coeffs[k]
            if _is_zero_coeff(fk):
                continue
            acc = acc + (fk * k) * g[n - k]
        g[n] = acc * Fraction(1, n)
    return TSeries(f.order, g)


def series_log(f: TSeries) -> TSeries:
    """Ordinary log of a series with constant term 1.

    Recurrence h_n = f_n - (1/n) sum_{k=1..n-1} k h_k f_{n-k}.
    """
    _require_unit_constant(f, "series_log")
    h = [ZERO] * (f.order + 1)
    for n in range(1, f.order + 1):
        acc = ZERO
        for k in range(1, n):
            hk = h[k]
            if _is_zero_coeff(hk):
                continue
            fnk = f.coeffs[n - k]
            if _is_zero_coeff(fnk):
                continue
            acc = acc + (hk * k) * fnk
        h[n] = f.coeffs[n] - acc * Fraction(1, n)
    return TSeries(f.order, h)


def Exp(f: TSeries) -> TSeries:
    """Plethystic exponential exp . Psi."""
    return series_exp(psi(f))


def Log(g: TSeries) -> TSeries:
    """Plethystic logarithm Psi_inv . log; inverse of Exp."""
    return psi_inv(series_log(g))


def pow_scalar(f: TSeries, g: ScalarLike) -> TSeries:
    """Ordinary power f^g = exp(g log f) for a scalar exponent g."""
    _require_unit_constant(f, "pow_scalar")
    return series_exp(series_log(f) * g)


def Pow(f: TSeries, g: ScalarLike) -> TSeries:
    """Plethystic power Pow(f, g) = Exp(g Log(f))."""
    _require_unit_constant(f, "Pow")
    return Exp(Log(f) * g)


def irreducible_poly_count(d: int) -> QPoly:
    """Phi_d(q) = (1/d) sum_{e|d} mu(d/e)(q^e - 1), as an exact polynomial.

    Counts monic irreducible degree-d polynomials with nonzero constant
    term over a field with q elements; coefficients may be non-integral
    rationals (d * Phi_d always has integer coefficients).

    >>> irreducible_poly_count(1) == q - 1
    True
    >>> irreducible_poly_count(2) == (q * q - q) * Fraction(1, 2)
    True
    """
    if d < 1:
        raise ValueError("irreducible_poly_count needs d >= 1")
    acc = ZERO
    for e in divisors(d):
        mu = mobius(d // e)
        if mu:
            acc = acc + (q ** e - 1) * mu
    return acc * Fraction(1, d)


def pow_product(f: TSeries, dmax: int = None) -> TSeries:
    """Product expansion prod_{d=1..dmax} psi_d(f)^(-Phi_d), truncated.

    Factors with d larger than the truncation order differ from 1 only
    beyond the order, so dmax defaults to f.order.
    """
    _require_unit_constant(f, "pow_product")
    if dmax is None:
        dmax = f.order
    acc = TSeries.one(f.order)
    for d in range(1, dmax + 1):
        acc = acc * pow_scalar(f.adams(d), -irreducible_poly_count(d))
    return acc
