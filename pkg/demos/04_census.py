"""Counting, distributions, and the exhaustive property sweep.

Enumerates all small alternating sign matrices, checks the totals
against the closed product formula, tabulates a few statistics, and runs
the full verification registry at a desk-scale order.

Run:  python demos/04_census.py
"""

from asmc import distribution, enumerate_asm, formula_count, matrix_to_text
from asmc.verify import verify_suite

print("Totals match the closed formula:")
for n in range(1, 7):
    print(f"  n={n}: {sum(1 for _ in enumerate_asm(n)):>5}  (formula {formula_count(n)})")

print("\nThe single order-3 matrix with a -1:\n")
(only,) = enumerate_asm(3, s=1)
print(matrix_to_text(only))

print("Distribution of the first-row statistic r at n=4:")
for (r,), count in sorted(distribution(4, ["r"]).items()):
    print(f"  r={r}: {count}")

print("\nElectric and magnetic charges are equidistributed at n=5:")
e_counts = distribution(5, ["E"])
b_counts = distribution(5, ["B"])
for (v,), count in sorted(e_counts.items()):
    print(f"  value {v:+d}:  E-count {count:>3}   B-count {b_counts[(v,)]:>3}")

print("\nFull property sweep up to n=4:\n")
print(verify_suite(4).to_text())
