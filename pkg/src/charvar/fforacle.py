"""Brute-force verification over small finite fields.

Everything here recomputes, by direct enumeration, quantities that the
series pipeline produces symbolically: conjugation orbits of m-tuples of
invertible matrices over F_p, and the subsets of those orbits that are
absolutely irreducible or absolutely indecomposable.  Matching the two
routes at several primes is strong evidence that the symbolic counts are
polynomials in q evaluated correctly.

Matrices are flat tuples of length d*d with entries reduced mod p, row
major.  All sizes are deliberately tiny; guards raise SizeGuardError
before anything expensive starts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .arith import is_prime
from .combinatorics import SizeGuardError

__all__ = [
    "ConjClass", "OracleCensus", "algebra_span_dim", "burnside_orbit_count",
    "conjugacy_classes", "endomorphism_basis", "gl_enumerate", "gl_order",
    "identity", "is_absolutely_indecomposable", "is_absolutely_irreducible",
    "mat_det", "mat_inv", "mat_mul", "orbit_census",
]

# enumeration cost is p**(d*d); orbit sweeps cost |GL_d(F_p)|**m
_ENUM_LIMIT = 100_000
_CLASS_LIMIT = 2_000
_CENSUS_LIMIT = 200_000


def _check_dp(d: int, p: int) -> None:
    if d < 1:
        raise ValueError("dimension must be at least 1")
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")


def identity(d: int) -> tuple:
    return tuple(1 if i == j else 0 for i in range(d) for j in range(d))


def mat_mul(a: tuple, b: tuple, d: int, p: int) -> tuple:
    """Product of two d-by-d matrices over F_p."""
    out = []
    for i in range(d):
        row = a[i * d:(i + 1) * d]
        for j in range(d):
            out.append(sum(row[k] * b[k * d + j] for k in range(d)) % p)
    return tuple(out)


def mat_det(a: tuple, d: int, p: int) -> int:
    """Determinant mod p by Gaussian elimination."""
    m = [list(a[i * d:(i + 1) * d]) for i in range(d)]
    det = 1
    for c in range(d):
        pivot = next((i for i in range(c, d) if m[i][c] % p), None)
        if pivot is None:
            return 0
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det = (det * m[c][c]) % p
        inv = pow(m[c][c], -1, p)
        for i in range(c + 1, d):
            if m[i][c]:
                f = (m[i][c] * inv) % p
                for j in range(c, d):
                    m[i][j] = (m[i][j] - f * m[c][j]) % p
    return det % p


def mat_inv(a: tuple, d: int, p: int) -> tuple:
    """Inverse of an invertible matrix over F_p.

    Raises ZeroDivisionError if the matrix is singular.
    """
    m = [list(a[i * d:(i + 1) * d]) + [1 if k == i else 0 for k in range(d)]
         for i in range(d)]
    for c in range(d):
        pivot = next((i for i in range(c, d) if m[i][c] % p), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        m[c], m[pivot] = m[pivot], m[c]
        inv = pow(m[c][c], -1, p)
        m[c] = [(x * inv) % p for x in m[c]]
        for i in range(d):
            if i != c and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[c])]
    return tuple(m[i][d + j] for i in range(d) for j in range(d))


def gl_order(d: int, p: int) -> int:
    """Order of the group of invertible d-by-d matrices over F_p."""
    _check_dp(d, p)
    q = p ** d
    out = 1
    for i in range(d):
        out *= q - p ** i
    return out


def gl_enumerate(d: int, p: int) -> list:
    """All invertible d-by-d matrices over F_p, in lexicographic order."""
    _check_dp(d, p)
    if p ** (d * d) > _ENUM_LIMIT:
        raise SizeGuardError(f"enumerating {p}**{d * d} matrices is too much")
    out = [a for a in itertools.product(range(p), repeat=d * d)
           if mat_det(a, d, p) != 0]
    assert len(out) == gl_order(d, p)
    return out


@dataclass(frozen=True)
class ConjClass:
    rep: tuple
    size: int
    centralizer_order: int


def conjugacy_classes(d: int, p: int) -> list:
    """Conjugacy classes of the invertible matrices, lex-least reps first."""
    group = gl_enumerate(d, p)
    n = len(group)
    if n > _CLASS_LIMIT:
        raise SizeGuardError(f"group of order {n} exceeds the class limit")
    inverses = [mat_inv(g, d, p) for g in group]
    visited = set()
    out = []
    for x in group:
        if x in visited:
            continue
        orbit = {mat_mul(mat_mul(g, x, d, p), ginv, d, p)
                 for g, ginv in zip(group, inverses)}
        visited |= orbit
        out.append(ConjClass(rep=x, size=len(orbit),
                             centralizer_order=n // len(orbit)))
    assert sum(c.size for c in out) == n
    return out


def burnside_orbit_count(d: int, p: int, m: int) -> int:
    """Number of conjugation orbits on m-tuples, via centralizer orders.

    Fixed points of g acting on tuples are the tuples with every entry in
    the centralizer of g, so averaging over the group leaves one power of
    the centralizer order per class.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    return sum(c.centralizer_order ** (m - 1) for c in conjugacy_classes(d, p))


def _rref(rows, ncols: int, p: int):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _nullspace(rows, ncols: int, p: int) -> list:
    red, pivots = _rref(rows, ncols, p)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [0] * ncols
        v[free] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-red[i][free]) % p
        basis.append(tuple(v))
    return basis


def algebra_span_dim(mats, d: int, p: int) -> int:
    """Dimension of the unital matrix algebra generated by the tuple.

    Grows an echelon basis by left-multiplying reached elements by the
    generators, starting from the identity; every product of generators
    is reached that way.
    """
    n = d * d
    basis = []

    def try_add(vec):
        v = list(vec)
        for piv, row in basis:
            if v[piv]:
                f = v[piv]
                v = [(x - f * y) % p for x, y in zip(v, row)]
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            return False
        inv = pow(v[piv], -1, p)
        basis.append((piv, [(x * inv) % p for x in v]))
        return True

    start = identity(d)
    work = [start]
    try_add(start)
    while work and len(basis) < n:
        w = work.pop()
        for x in mats:
            v = mat_mul(x, w, d, p)
            if try_add(v):
                work.append(v)
    return len(basis)


def is_absolutely_irreducible(mats, d: int, p: int) -> bool:
    """True when the tuple generates the full d*d matrix algebra."""
    return algebra_span_dim(mats, d, p) == d * d


def endomorphism_basis(mats, d: int, p: int) -> list:
    """Basis of the algebra of matrices commuting with every tuple entry."""
    rows = []
    for x in mats:
        for i in range(d):
            for j in range(d):
                row = [0] * (d * d)
                # coefficient of e[a][b] in (e*x - x*e)[i][j]
                for b in range(d):
                    row[i * d + b] = (row[i * d + b] + x[b * d + j]) % p
                for a in range(d):
                    row[a * d + j] = (row[a * d + j] - x[i * d + a]) % p
                rows.append(row)
    return _nullspace(rows, d * d, p)


def is_absolutely_indecomposable(mats, d: int, p: int) -> bool:
    """True when the commuting algebra is local with residue field F_p.

    A tuple stays indecomposable over every field extension exactly when
    its endomorphism algebra E has a unique maximal ideal and E modulo
    that ideal is F_p itself.  Both conditions are read off from the set
    of singular elements of E: they must form a linear subspace of
    codimension one.  A singular element of E, having a polynomial of
    itself as candidate inverse, is singular in E too, so matrix rank
    decides invertibility.
    """
    basis = endomorphism_basis(mats, d, p)
    k = len(basis)
    nonunits = []
    for coeffs in itertools.product(range(p), repeat=k):
        e = [0] * (d * d)
        for c, b in zip(coeffs, basis):
            if c:
                for i in range(d * d):
                    e[i] = (e[i] + c * b[i]) % p
        if mat_det(tuple(e), d, p) == 0:
            nonunits.append(coeffs)
    _, pivots = _rref(nonunits, k, p)
    rank = len(pivots)
    return len(nonunits) == p ** rank and k - rank == 1


@dataclass(frozen=True)
class OracleCensus:
    d: int
    p: int
    m: int
    group_order: int
    orbits: int
    abs_irr: int
    abs_ind: int


def orbit_census(d: int, p: int, m: int) -> OracleCensus:
    """Classify every conjugation orbit of m-tuples of invertible matrices.

    Sweeps the tuples in lexicographic index order, so the first tuple of
    each orbit is its canonical representative.  Classification happens
    once per orbit; it is conjugation-invariant.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    group = gl_enumerate(d, p)
    n = len(group)
    # the conjugation index table alone costs n**2
    if n ** max(m, 2) > _CENSUS_LIMIT:
        raise SizeGuardError(f"sweeping {n}**{m} tuples is too much")
    index = {g: i for i, g in enumerate(group)}
    conj = []
    for g in group:
        ginv = mat_inv(g, d, p)
        conj.append(tuple(index[mat_mul(mat_mul(g, x, d, p), ginv, d, p)]
                          for x in group))
    orbits = abs_irr = abs_ind = 0
    visited = set()
    for tup in itertools.product(range(n), repeat=m):
        if tup in visited:
            continue
        orbit = {tuple(row[i] for i in tup) for row in conj}
        visited.update(orbit)
        orbits += 1
        mats = tuple(group[i] for i in tup)
        irr = is_absolutely_irreducible(mats, d, p)
        ind = is_absolutely_indecomposable(mats, d, p)
        # irreducible forces indecomposable; anything else is a bug
        assert ind or not irr
        abs_irr += irr
        abs_ind += ind
    return OracleCensus(d=d, p=p, m=m, group_order=n, orbits=orbits,
                        abs_irr=abs_irr, abs_ind=abs_ind)
