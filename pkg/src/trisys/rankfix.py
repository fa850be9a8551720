"""Forcing the 3-rank of a composed system to exactly v - k - 1.

A composed system is orthogonal to the layout code G(v,k), so its rank
is at most v-k-1; aligned ingredients can push it lower.  Replacing the
first sub-system by a carefully permuted copy removes every stray dual
vector: the permutation is chosen so that the dual of the new sub-system
meets the relevant local layout code only in the all-one line.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gf3
from .composition import Decomposition, compose
from .designs import BlockDesign, StsInstance, dual_space, p_rank, permute_sts


class StructureViolation(ValueError):
    """The dual space does not have the uniform layout-code structure."""


@dataclass(frozen=True)
class PointPermutation:
    """A bijection of {0..n-1}; image[i] is where point i goes."""

    n: int
    image: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(int(i) for i in self.image))
        if sorted(self.image) != list(range(self.n)):
            raise ValueError("image is not a bijection")

    @staticmethod
    def identity(n: int) -> "PointPermutation":
        return PointPermutation(n, tuple(range(n)))

    def inverse(self) -> "PointPermutation":
        inv = [0] * self.n
        for i, j in enumerate(self.image):
            inv[j] = i
        return PointPermutation(self.n, tuple(inv))

    def after(self, other: "PointPermutation") -> "PointPermutation":
        """Composite permutation: first `other`, then self."""
        if self.n != other.n:
            raise ValueError("size mismatch")
        return PointPermutation(self.n, tuple(self.image[j] for j in other.image))

    def apply_sts(self, s: StsInstance) -> StsInstance:
        return permute_sts(s, self.image)

    def apply_subspace(self, s: gf3.Subspace) -> gf3.Subspace:
        return gf3.permute_subspace(s, self.image)


def _basis_with_allone_first(d: gf3.Subspace) -> np.ndarray:
    """Rows completing the all-one vector to a basis of the subspace."""
    n = d.ambient_dim
    ones = np.ones(n, dtype=np.int64)
    if not d.contains(ones):
        raise StructureViolation(
            "dual space does not contain the all-one vector (corrupt design data)"
        )
    rows = [ones]
    for row in d.basis:
        if gf3.rank(np.vstack(rows + [row])) > len(rows):
            rows.append(row)
    assert len(rows) == d.dim
    return np.array(rows[1:], dtype=np.int64).reshape(d.dim - 1, n)


def _column_tuples(rows: np.ndarray) -> list[tuple[int, ...]]:
    return [tuple(int(x) for x in rows[:, j]) for j in range(rows.shape[1])]


def _check_uniform(tuples: list[tuple[int, ...]], dims: int) -> None:
    n = len(tuples)
    if n % 3**dims != 0:
        raise StructureViolation(f"{3**dims} tuple values cannot split {n} columns evenly")
    want = n // 3**dims
    counts: dict[tuple[int, ...], int] = {}
    for t in tuples:
        counts[t] = counts.get(t, 0) + 1
    if len(counts) != 3**dims or any(c != want for c in counts.values()):
        raise StructureViolation(
            "column tuples are not uniformly distributed over the value space"
        )


def _sorting_permutation(tuples: list[tuple[int, ...]]) -> PointPermutation:
    """Stable sort of positions by column tuple; image[i] = rank of i."""
    order = sorted(range(len(tuples)), key=lambda i: (tuples[i], i))
    image = [0] * len(tuples)
    for new_pos, old_pos in enumerate(order):
        image[old_pos] = new_pos
    return PointPermutation(len(tuples), tuple(image))


def dual_canonicalize(s: StsInstance) -> tuple[PointPermutation, int]:
    """A relabeling sending the dual space onto the standard layout code.

    Returns (sigma, l) with dual(sigma(s)) exactly the row space of
    generator_gvk(v, l), where l+1 is the dual dimension.  The sentinel
    l = -1 (trivial dual, identity sigma) cannot occur for a genuine
    triple system, whose blocks are always orthogonal to the all-one
    vector; it is kept for defensive completeness.
    """
    v = s.v
    d = dual_space(s.design)
    if d.dim == 0:
        return PointPermutation.identity(v), -1
    l = d.dim - 1
    target = gf3.row_space(gf3.generator_gvk(v, l))
    if d == target:
        return PointPermutation.identity(v), l
    reduced = _basis_with_allone_first(d)
    tuples = _column_tuples(reduced)
    _check_uniform(tuples, l)
    sigma = _sorting_permutation(tuples)
    if sigma.apply_subspace(d) != target:
        raise AssertionError("canonicalization failed to reach the standard layout")
    return sigma, l


def mix_matrix(t: int) -> np.ndarray:
    """The t x t column prescription used by perm_intersection for t >= 2.

    Its defining property, det(I - 2C) != 0 over GF(3), makes the stacked
    generator pair full rank."""
    if t < 2:
        raise ValueError("defined for t >= 2")
    c = np.zeros((t, t), dtype=np.int64)
    c[0, t - 1] = 2
    for i in range(1, t):
        c[i, i - 1] = 2
    c[t - 1, t - 1] = 1
    return c


def perm_intersection(T: int, t: int) -> PointPermutation:
    """A coordinate permutation pi with dim(G(T,t) ∩ pi(G(T,t))) = 1.

    t = 0 is the identity; t = 1 interleaves the three thirds; t >= 2
    routes chosen tuple columns so the stacked generators contain a full
    rank (2t+1)-minor, with unconstrained positions mapped first-fit in
    increasing order.  The result is verified before returning.
    """
    if t < 0 or T % 3**t != 0:
        raise ValueError(f"3^t must divide T, got T={T}, t={t}")
    if t >= 1 and T <= 3:
        raise ValueError("T > 3 is required for t >= 1 (the two codes would coincide)")
    if t == 0:
        return PointPermutation.identity(T)
    if t == 1:
        third = T // 3
        image = [3 * (i % third) + i // third for i in range(T)]
        pi = PointPermutation(T, tuple(image))
    else:
        m = T // 3**t
        c = mix_matrix(t)

        def pos(tup) -> int:
            return tuple_value(tup) * m

        def tuple_value(tup) -> int:
            val = 0
            for x in tup:
                val = 3 * val + int(x)
            return val

        mapping: dict[int, int] = {0: 0}
        for i in range(1, t + 1):
            e_i = tuple(1 if j == i - 1 else 0 for j in range(t))
            two_e_i = tuple(2 if j == i - 1 else 0 for j in range(t))
            col = tuple(int(x) for x in c[:, i - 1])
            mapping[pos(col)] = pos(e_i)
            mapping[pos(e_i)] = pos(two_e_i)
        free_src = [i for i in range(T) if i not in mapping]
        used_dst = set(mapping.values())
        free_dst = [i for i in range(T) if i not in used_dst]
        image = [0] * T
        for src, dst in mapping.items():
            image[src] = dst
        for src, dst in zip(free_src, free_dst):
            image[src] = dst
        pi = PointPermutation(T, tuple(image))
    g = gf3.row_space(gf3.generator_gvk(T, t))
    if gf3.intersect_dim(g, pi.apply_subspace(g)) != 1:
        raise AssertionError("intersection permutation failed verification")
    return pi


def verify_dual_structure(d: BlockDesign) -> int:
    """Check the dual of a (possibly partial) system is a relabeled layout
    code G(v, k'); returns k'.  Raises StructureViolation otherwise."""
    dual = dual_space(d)
    if dual.dim == 0:
        raise StructureViolation("dual space is trivial")
    reduced = _basis_with_allone_first(dual)
    kprime = dual.dim - 1
    _check_uniform(_column_tuples(reduced), kprime)
    return kprime


def force_exact_rank(d: Decomposition) -> StsInstance:
    """Rebuild compose(d) with the first sub-system permuted so the dual
    space is exactly the row space of generator_gvk(v, k).

    Steps: split off everything outside the first group; read its dual's
    excess dimensions k'-k and the within-group layout; canonicalize the
    first sub-system's own dual (sigma, l); pick the intersection
    permutation at level t = max(l, k'-k); reinsert the sub-system
    through that permutation, undoing the within-group sorting so that
    all blocks outside the first group stay untouched.  The resulting
    rank v-k-1 is recomputed, never trusted.
    """
    k, t_order = d.k, d.T
    if k < 1:
        raise ValueError("k must be >= 1")
    if t_order <= 3:
        raise ValueError("sub-system order must exceed 3")
    v = d.v
    full = compose(d)
    first = {(_sub_block(b, 0, t_order)) for b in d.sub_stss[0].blocks}
    rest = tuple(b for b in full.blocks if b not in first)
    b_minus = BlockDesign(v, rest)
    dual_minus = dual_space(b_minus)
    layout = gf3.generator_gvk(v, k)
    for row in layout:
        if not dual_minus.contains(row):
            raise AssertionError("composed system lost orthogonality to its layout code")
    kprime = dual_minus.dim - 1

    # Rows extending the layout code to a basis of the bigger dual.
    rows = [np.asarray(r, dtype=np.int64) for r in layout]
    extension: list[np.ndarray] = []
    for row in dual_minus.basis:
        if gf3.rank(np.vstack(rows + [row])) > len(rows):
            rows.append(row)
            extension.append(row)
    assert len(extension) == kprime - k

    if extension:
        local = np.array([r[:t_order] for r in extension], dtype=np.int64)
        tuples = _column_tuples(local)
        _check_uniform(tuples, kprime - k)
        tau0 = _sorting_permutation(tuples)
    else:
        tau0 = PointPermutation.identity(t_order)

    sigma, l = dual_canonicalize(d.sub_stss[0])
    level = max(l if l >= 0 else 0, kprime - k)
    pi = perm_intersection(t_order, level)
    relabel = tau0.inverse().after(pi.after(sigma))
    replaced = relabel.apply_sts(d.sub_stss[0])

    blocks = rest + tuple(_sub_block(b, 0, t_order) for b in replaced.blocks)
    result = StsInstance(BlockDesign(v, blocks))

    target = gf3.row_space(layout)
    if dual_space(result.design) != target:
        raise AssertionError("rank forcing failed: dual space is not the layout code")
    assert p_rank(result.design, 3) == v - k - 1
    return result


def _sub_block(block, i: int, t: int):
    return (i * t + block[0], i * t + block[1], i * t + block[2])
