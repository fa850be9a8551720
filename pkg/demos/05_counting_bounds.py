"""Counting lower bounds, evaluated exactly in big integers.

How many non-isomorphic resolvable systems of order v = 3^k * T and
3-rank exactly v-k-1 are there?  Dividing the count of distinct
compositions by the size of the layout code's symmetry group gives a
lower bound; everything here is exact integer arithmetic.
"""

from trisys import (
    agl_order,
    bound_rcw,
    bound_thm1,
    bound_thm2,
    example_n3_bound,
    gl2_order,
    min_rank,
)

# Symmetry group sizes that sit in the denominators.
print("affine symmetries:", [agl_order(k) for k in range(4)])
print("binary linear groups:", [gl2_order(m) for m in range(6)])

# Minimum possible 3-rank by order.
for v in (9, 15, 21, 27, 45, 63):
    print(f"min 3-rank of order {v}: {min_rank(v)}")

# Ingredient counts for T = 7: resolvable order-21 systems orthogonal to
# their layout code, and transversal designs with an orthogonal mate.
rcw = bound_rcw(7)
print(f"\norder-21 ingredient bound: {rcw.numerator}/{rcw.denominator} "
      f"= {rcw.floor_value}")
n3 = example_n3_bound()
print(f"transversal ingredient bound: {n3}")

# Headline: at order 63 with k = 2 the ingredient bounds multiply out to
# more than 10^64 isomorphism classes.
rep = bound_thm2(7, 2, rcw.floor_value, n3)
print(f"\norder 63, rank 60: floor has {rep.decimal_digits} digits")
print(f"value: {rep.floor_value}")
print("at least 10^64:", rep.floor_value >= 10**64)

# The same machinery evaluates the T = 15 (mod 18) variant; unknown
# ingredient counts stay symbolic inputs.
rep15 = bound_thm1(15, 1, 4, 7)
print(f"\norder 45 with toy ingredient counts: floor={rep15.floor_value} "
      f"(denominator 15!^3 * {agl_order(1)})")
