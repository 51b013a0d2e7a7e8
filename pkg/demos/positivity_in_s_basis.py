"""Expand the counting polynomials in powers of s = q - 1.

The semisimple counts A_d turn out to have nonnegative integer
coefficients in this basis; the absolutely irreducible counts do not,
and the first failure is easy to exhibit.
"""

from charvar import abs_irr_counts, expand_in_s, poly_str, positivity_report

m = 2
dmax = 6

report = positivity_report(m, dmax)
print(f"m = {m}: A_d in powers of (q-1), d <= {dmax}\n")
for d, coeffs, positive in report.rows:
    print(f"  d = {d}: {list(coeffs)}   nonnegative = {positive}")

# every row above is nonnegative
assert report.all_positive

# the irreducible counts break the pattern already at d = 2
print("\nabsolutely irreducible counts, same basis:")
for d, poly in enumerate(abs_irr_counts(m, dmax)):
    if d == 0:
        continue
    print(f"  d = {d}: {expand_in_s(poly)}")
d, k, c = report.irr_witness
print(f"\nfirst negative coefficient: degree-{d} count, "
      f"coefficient of (q-1)^{k} is {c}")
print("the polynomial itself:", poly_str(abs_irr_counts(m, 2)[2]))
