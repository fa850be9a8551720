"""Affine triple systems: the minimum-rank systems on 3^k points.

Point i carries the i-th ternary k-tuple; three points form a block when
their tuples sum to zero.  Translating a block coordinatewise never
leaves its parallel class, which hands us a resolution for free.
"""

from trisys import affine_geometry, generator_gvk, is_orthogonal, p_rank, row_space

for k in (1, 2, 3):
    ag = affine_geometry(k)
    v = 3**k
    print(f"k={k}: v={v}, blocks={len(ag.sts.blocks)}, "
          f"classes={ag.standard_resolution.n_classes}, "
          f"3-rank={p_rank(ag.sts.design, 3)} (v-k-1={v - k - 1})")

# The 9-point system in full: 12 blocks in 4 parallel classes.
ag = affine_geometry(2)
for i, cls in enumerate(ag.standard_resolution.classes):
    print(f"class {i}:", [ag.sts.blocks[j] for j in cls])

# Its dual space is the layout code G(9,2): all-one row plus the two
# tuple rows, so every block is orthogonal to all three.
code = row_space(generator_gvk(9, 2))
print("orthogonal to G(9,2):", is_orthogonal(ag.sts, code))
