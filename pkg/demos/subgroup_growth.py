"""Count finite-index subgroups of a free group three different ways.

Route one: J_n = n * [x^n] log(sum (n!)^(m-1) x^n).  Route two: the
classical recursion J_n = n*(n!)^(m-1) - sum ((n-k)!)^(m-1) J_k.  Route
three: exact q -> 1 limits of a transform of the absolutely irreducible
matrix counts, which recovers J_n / n.
"""

from fractions import Fraction

from charvar import hall_subgroup_counts, limit_transform, subgroup_counts

for m in (2, 3):
    nmax = 6
    series_route = subgroup_counts(m, nmax)
    recursive_route = hall_subgroup_counts(m, nmax)
    limits = limit_transform(m, min(nmax, 5))
    print(f"free group of rank {m}:")
    print(f"  series route     J_1..J_{nmax} = {series_route}")
    print(f"  recursion route  J_1..J_{nmax} = {recursive_route}")
    assert series_route == recursive_route
    scaled = [Fraction(j, n) for n, j in enumerate(series_route, start=1)]
    print(f"  character limits J_n/n        = {limits}")
    assert limits == scaled[:len(limits)]
    print()

# rank one: the infinite cyclic group has exactly one subgroup per index
print("rank 1 sanity:", subgroup_counts(1, 8))
