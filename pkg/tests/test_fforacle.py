"""Finite-field brute force, and its agreement with the series pipeline."""

import random

import pytest

from charvar.combinatorics import SizeGuardError
from charvar.counting import abs_ind_counts, abs_irr_counts, orbit_counts
from charvar.fforacle import (
    OracleCensus, algebra_span_dim, burnside_orbit_count, conjugacy_classes,
    endomorphism_basis, gl_enumerate, gl_order, identity,
    is_absolutely_indecomposable, is_absolutely_irreducible, mat_det, mat_inv,
    mat_mul, orbit_census,
)

I2 = (1, 0, 0, 1)
JORDAN = (1, 1, 0, 1)       # unipotent, one Jordan block
SWAP = (0, 1, 1, 0)
ORDER3 = (0, 1, 1, 1)       # irreducible characteristic polynomial over F_2


def test_matrix_arithmetic():
    assert mat_mul(I2, SWAP, 2, 2) == SWAP
    assert mat_mul(ORDER3, ORDER3, 2, 2) == (1, 1, 1, 0)
    assert mat_mul(mat_mul(ORDER3, ORDER3, 2, 2), ORDER3, 2, 2) == I2
    assert mat_det(I2, 2, 5) == 1
    assert mat_det((2, 1, 3, 4), 2, 5) == 0     # 8 - 3 = 5
    assert mat_inv(SWAP, 2, 3) == SWAP
    with pytest.raises(ZeroDivisionError):
        mat_inv((1, 1, 1, 1), 2, 2)


def test_det_multiplicative_and_inverse_roundtrip():
    rng = random.Random(20260819)
    p, d = 5, 3
    for _ in range(40):
        a = tuple(rng.randrange(p) for _ in range(d * d))
        b = tuple(rng.randrange(p) for _ in range(d * d))
        prod = mat_mul(a, b, d, p)
        assert mat_det(prod, d, p) == mat_det(a, d, p) * mat_det(b, d, p) % p
        if mat_det(a, d, p):
            assert mat_mul(a, mat_inv(a, d, p), d, p) == identity(d)
            assert mat_mul(mat_inv(a, d, p), a, d, p) == identity(d)


def test_group_orders():
    assert gl_order(1, 5) == 4
    assert gl_order(2, 2) == 6
    assert gl_order(2, 3) == 48
    assert gl_order(2, 5) == 480
    assert gl_order(3, 2) == 168
    for d, p in [(1, 7), (2, 2), (2, 3), (3, 2)]:
        assert len(gl_enumerate(d, p)) == gl_order(d, p)


def test_conjugacy_classes():
    small = conjugacy_classes(2, 2)
    assert sorted(c.size for c in small) == [1, 2, 3]
    assert sorted(c.centralizer_order for c in small) == [2, 3, 6]
    central = [c for c in small if c.size == 1]
    assert [c.rep for c in central] == [identity(2)]
    bigger = conjugacy_classes(2, 3)
    assert len(bigger) == 8
    assert sorted(c.centralizer_order for c in bigger) == [4, 6, 6, 8, 8, 8,
                                                           48, 48]
    assert sum(c.size for c in bigger) == 48


def test_burnside_agrees_with_sweep():
    for d, p, m in [(1, 3, 2), (2, 2, 2), (2, 2, 3), (2, 3, 2)]:
        assert orbit_census(d, p, m).orbits == burnside_orbit_count(d, p, m)


def test_algebra_span_classifier():
    assert algebra_span_dim((I2, I2), 2, 2) == 1
    assert algebra_span_dim((JORDAN, I2), 2, 2) == 2
    assert algebra_span_dim((ORDER3, I2), 2, 2) == 2
    assert algebra_span_dim((SWAP, ORDER3), 2, 2) == 4
    assert is_absolutely_irreducible((SWAP, ORDER3), 2, 2)
    assert not is_absolutely_irreducible((ORDER3, ORDER3), 2, 2)


def test_endomorphism_classifier():
    # scalar tuple: everything commutes, algebra of dim 4 is not local
    assert len(endomorphism_basis((I2, I2), 2, 2)) == 4
    assert not is_absolutely_indecomposable((I2, I2), 2, 2)
    # one Jordan block: commutant has dim 2, singular part is a line
    basis = endomorphism_basis((JORDAN, I2), 2, 2)
    assert len(basis) == 2
    for e in basis:
        assert mat_mul(e, JORDAN, 2, 2) == mat_mul(JORDAN, e, 2, 2)
    assert is_absolutely_indecomposable((JORDAN, I2), 2, 2)
    # commutant a quadratic field extension: splits after extension
    assert len(endomorphism_basis((ORDER3, I2), 2, 2)) == 2
    assert not is_absolutely_indecomposable((ORDER3, I2), 2, 2)
    # irreducible pair: commutant is scalar
    assert len(endomorphism_basis((SWAP, ORDER3), 2, 2)) == 1
    assert is_absolutely_indecomposable((SWAP, ORDER3), 2, 2)


def test_census_rank_two_base_case():
    assert orbit_census(2, 2, 2) == OracleCensus(
        d=2, p=2, m=2, group_order=6, orbits=11, abs_irr=3, abs_ind=6)


def test_census_matches_polynomial_counts():
    grid = [(1, 2, 2), (1, 3, 2), (1, 5, 3), (2, 2, 2), (2, 2, 3), (2, 3, 2),
            (3, 2, 2)]
    for d, p, m in grid:
        census = orbit_census(d, p, m)
        assert census.orbits == orbit_counts(m, dmax=d)[d].evaluate(p)
        assert census.abs_irr == abs_irr_counts(m, dmax=d)[d].evaluate(p)
        assert census.abs_ind == abs_ind_counts(m, dmax=d)[d].evaluate(p)


def test_scalar_group_census():
    census = orbit_census(1, 7, 4)
    assert census.group_order == 6
    assert census.orbits == census.abs_irr == census.abs_ind == 6 ** 4


def test_size_guards_and_validation():
    with pytest.raises(SizeGuardError):
        gl_enumerate(3, 5)
    with pytest.raises(SizeGuardError):
        conjugacy_classes(2, 7)
    with pytest.raises(SizeGuardError):
        orbit_census(2, 5, 2)
    with pytest.raises(ValueError):
        gl_order(2, 4)
    with pytest.raises(ValueError):
        gl_order(0, 3)
    with pytest.raises(ValueError):
        orbit_census(2, 2, 0)
