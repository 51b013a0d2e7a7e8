"""Census of m-tuples of permutations under simultaneous conjugation.

Tuples of permutations of degree n are actions of a free group on n
points; transitive ones correspond to index-n subgroups.  Weighting each
orbit by the reciprocal of its automorphism count turns the census into
an exponential identity, and plain orbit counts into a plethystic one.
"""

from math import factorial

from charvar import census_series_checks, perm_rep_census, subgroup_counts

m = 2
print(f"m = {m} census:")
print("  n |  tuples  orbits  transitive  aut-weight  all-orbit weight")
for n in range(1, 5):
    row = perm_rep_census(n, m)
    print(f" {n:2d} | {row.total:7d} {row.orbit_count:7d} "
          f"{row.transitive_count:11d} {str(row.aut_weight):>11} "
          f"{str(row.aut_weight_all):>17}")
    # weighting every orbit by 1/|Aut| collapses the count to (n!)^(m-1)
    assert row.aut_weight_all == factorial(n) ** (m - 1)

# transitive weights are J_n / n
counts = subgroup_counts(m, 4)
print("\nsubgroup counts   :", counts)
print("n * aut-weight    :", [perm_rep_census(n, m).aut_weight * n
                              for n in range(1, 5)])

# both exponential identities, checked coefficient by coefficient
print("\nseries identities :", census_series_checks(4, m))
