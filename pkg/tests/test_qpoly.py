"""Exact polynomial and rational-function arithmetic."""

import random
from fractions import Fraction

import pytest

from charvar.qpoly import (
    ExactDivisionError, PoleError, QPoly, QRatFun, ONE, ZERO,
    adams_q, expand_in_s, from_s_coeffs, limit_at_1, poly_gcd, poly_str,
    q, ratio,
)


def rand_poly(rng, deg, frac=False):
    cs = [rng.randint(-9, 9) for _ in range(deg + 1)]
    if frac:
        cs = [Fraction(c, rng.randint(1, 4)) for c in cs]
    return QPoly(cs)


def test_ring_ops_basic():
    assert (q - 1) * (q + 1) == q ** 2 - 1
    p = q ** 3 - q ** 2 - 1
    assert p.evaluate(1) == -1
    assert p(2) == 3
    assert (q ** 2 - 1).divexact(q - 1) == q + 1


def test_divexact_rejects_inexact():
    with pytest.raises(ExactDivisionError):
        (q ** 2 + 1).divexact(q - 1)


def test_divmod_random():
    rng = random.Random(11)
    for _ in range(60):
        a = rand_poly(rng, rng.randint(0, 8))
        b = rand_poly(rng, rng.randint(0, 5))
        if b.is_zero:
            continue
        quot, rem = divmod(a, b)
        assert quot * b + rem == a
        assert rem.degree < b.degree or rem.is_zero


def test_zero_and_scalar_conventions():
    assert ZERO.is_zero and ZERO.degree == -1
    assert QPoly([5]) == 5
    assert hash(QPoly([5])) == hash(5)
    assert QPoly([0, 0]) == ZERO
    assert q ** 0 == ONE


def test_evaluate_stays_exact():
    p = QPoly([Fraction(1, 2), 1])
    assert p(Fraction(1, 2)) == 1
    assert isinstance((q ** 2)(3), int)


def test_expand_in_s_examples():
    # q^3 (q-1)^2 = (s+1)^3 s^2 with s = q-1
    p = q ** 3 * (q - 1) ** 2
    assert expand_in_s(p) == [0, 0, 1, 3, 3, 1]
    assert expand_in_s(q - 1) == [0, 1]
    assert expand_in_s(ONE) == [1]
    assert expand_in_s(ZERO) == []


def test_expand_in_s_roundtrip():
    rng = random.Random(23)
    for _ in range(60):
        p = rand_poly(rng, rng.randint(0, 10), frac=rng.random() < 0.3)
        assert from_s_coeffs(expand_in_s(p)) == p


def test_adams_examples():
    assert adams_q(q - 1, 2) == q ** 2 - 1
    assert adams_q(q ** 2 + q, 3) == q ** 6 + q ** 3
    assert adams_q((q - 1) ** 2, 2) == (q ** 2 - 1) ** 2


def test_adams_composes():
    rng = random.Random(5)
    for _ in range(40):
        p = rand_poly(rng, rng.randint(0, 6))
        a, b = rng.randint(1, 6), rng.randint(1, 6)
        assert adams_q(adams_q(p, a), b) == adams_q(p, a * b)


def test_ratio_demotes_to_polynomial():
    assert ratio(q ** 2 - 1, q - 1) == q + 1
    assert isinstance(ratio(q ** 2 - 1, q - 1), QPoly)
    v = q ** 3 * (q - 1) ** 2 / (q - 1) ** 2
    assert v == q ** 3
    assert ratio(ZERO, q - 1) == ZERO


def test_ratfun_canonical_form():
    f = ratio(2 * q + 2, 2 * q - 4)          # (q+1)/(q-2)
    assert isinstance(f, QRatFun)
    assert f.den.leading == 1
    assert poly_gcd(f.num, f.den) == ONE
    assert f == ratio(q + 1, q - 2)


def test_ratfun_equality_matches_cross_multiplication():
    rng = random.Random(77)
    for _ in range(40):
        a = rand_poly(rng, rng.randint(0, 4))
        b = rand_poly(rng, rng.randint(1, 4))
        c = rand_poly(rng, rng.randint(0, 3))
        if b.is_zero or c.is_zero:
            continue
        assert ratio(a * c, b * c) == ratio(a, b)
        d = rand_poly(rng, rng.randint(0, 4))
        e = rand_poly(rng, rng.randint(1, 4))
        if e.is_zero:
            continue
        same = (a * e == d * b)
        assert (ratio(a, b) == ratio(d, e)) == same


def test_ratfun_field_ops():
    f = ratio(ONE, q - 1)
    assert f * (q - 1) == ONE
    assert f + f == ratio(QPoly([2]), q - 1)
    assert (f ** -1) == q - 1
    g = ratio(q, q + 1)
    assert f / g == ratio(q + 1, q * (q - 1))
    assert 1 / (q - 1) == f


def test_ratfun_evaluate_and_poles():
    f = ratio(q + 1, q - 2)
    assert f(3) == 4
    assert f(0) == Fraction(-1, 2)
    with pytest.raises(PoleError):
        f(2)


def test_limit_at_1():
    assert limit_at_1((q ** 2 - 1) / (q - 1)) == 2
    assert limit_at_1(q ** 3 * (q - 1) ** 2 / (q - 1) ** 2) == 1
    with pytest.raises(PoleError):
        limit_at_1(ratio(q - 1, (q - 1) ** 2))
    # equal (q-1)-valuations left after reduction
    assert limit_at_1(ratio(q + 1, q + 2)) == Fraction(2, 3)
    # numerator vanishes to higher order: limit is 0
    assert limit_at_1(ratio((q - 1) ** 2 * (q + 1), (q - 1) * (q ** 2 + 1))) == 0


def test_limit_at_1_on_polynomials():
    rng = random.Random(3)
    for _ in range(30):
        p = rand_poly(rng, rng.randint(0, 8))
        assert limit_at_1(p) == p(1)


def test_poly_str():
    assert poly_str(q ** 2 - 2 * q + 1) == "q^2 - 2*q + 1"
    assert poly_str(ZERO) == "0"
    assert poly_str(QPoly([0, Fraction(3, 2)])) == "3/2*q"
    assert poly_str(-q) == "-q"
    assert str(ratio(ONE, q - 1)) == "(1)/(q - 1)"


def test_adams_on_ratfun():
    f = ratio(q + 1, q ** 2 + q - 1)
    g = adams_q(f, 2)
    assert g == ratio(q ** 2 + 1, q ** 4 + q ** 2 - 1)
    assert g.den.leading == 1
