"""Exact linear algebra over prime fields, with GF(3) as the main case.

Matrices are dense 2-D numpy int64 arrays with entries reduced mod p.
Everything here is integer arithmetic; no floating point is used anywhere.
Subspaces carry a canonical reduced-row-echelon basis, so two equal
subspaces compare equal entry for entry.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

MAX_PRIME = 251


def _check_prime(p: int) -> None:
    if p < 2 or p > MAX_PRIME or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise ValueError(f"p must be a prime <= {MAX_PRIME}, got {p}")


def as_matrix(rows, p: int = 3) -> np.ndarray:
    """Coerce to a 2-D int64 array with entries reduced mod p."""
    a = np.asarray(rows, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={a.ndim}")
    return np.mod(a, p)


def rref(m, p: int = 3) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(p).

    Returns (R, pivot_cols).  R has unit pivots, zeros above and below
    every pivot, and pivot columns strictly increasing; len(pivot_cols)
    is the rank.
    """
    _check_prime(p)
    a = as_matrix(m, p).copy()
    n_rows, n_cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        others = np.nonzero(a[:, c])[0]
        others = others[others != r]
        if others.size:
            a[others] = (a[others] - np.outer(a[others, c], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m, p: int = 3) -> int:
    """Rank over GF(p) of a matrix (rows in any order)."""
    return len(rref(m, p)[1])


def generator_gvk(v: int, k: int) -> np.ndarray:
    """Generator matrix of the all-one-plus-tuple-rows code on v points.

    Row 0 is all ones.  Rows 1..k list, per column, the k ternary digits
    (most significant first) of the column's tuple index: all 3^k tuples
    appear in lexicographic order, each repeated v/3^k times consecutively.
    """
    if v <= 0 or k < 0:
        raise ValueError(f"need v >= 1 and k >= 0, got v={v}, k={k}")
    if v % 3**k != 0:
        raise ValueError(f"3^k must divide v, got v={v}, k={k}")
    m = v // 3**k
    g = np.ones((k + 1, v), dtype=np.int64)
    cols = np.arange(v)
    for i in range(1, k + 1):
        g[i] = (cols // (m * 3 ** (k - i))) % 3
    return g


@dataclass(frozen=True)
class Subspace:
    """A subspace of GF(3)^n held as a canonical RREF basis.

    Canonical form makes equality of subspaces a plain array comparison.
    The basis array is read-only; dim 0 subspaces have a (0, n) basis.
    """

    ambient_dim: int
    basis: np.ndarray = field(compare=False)

    @staticmethod
    def from_rows(rows, ambient_dim: int | None = None) -> "Subspace":
        a = as_matrix(rows, 3)
        if ambient_dim is None:
            ambient_dim = a.shape[1]
        if a.shape[1] != ambient_dim:
            raise ValueError("row length does not match ambient dimension")
        r, pivots = rref(a, 3)
        b = np.ascontiguousarray(r[: len(pivots)])
        b.setflags(write=False)
        return Subspace(ambient_dim, b)

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        b = np.zeros((0, ambient_dim), dtype=np.int64)
        b.setflags(write=False)
        return Subspace(ambient_dim, b)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def contains(self, vec) -> bool:
        v = np.mod(np.asarray(vec, dtype=np.int64), 3)
        if v.shape != (self.ambient_dim,):
            raise ValueError("vector length does not match ambient dimension")
        return rank(np.vstack([self.basis, v]), 3) == self.dim

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and np.array_equal(
            self.basis, other.basis
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis.tobytes()))


def row_space(m) -> Subspace:
    a = as_matrix(m, 3)
    return Subspace.from_rows(a, a.shape[1])


def null_space(m, p: int = 3) -> Subspace:
    """Right null space over GF(p): all x with m @ x = 0.

    Only GF(3) null spaces are wrapped as Subspace values; dim equals
    cols - rank (rank-nullity).
    """
    if p != 3:
        raise ValueError("null_space is provided over GF(3) only")
    a = as_matrix(m, p)
    n_cols = a.shape[1]
    r, pivots = rref(a, p)
    free = [c for c in range(n_cols) if c not in pivots]
    if not free:
        return Subspace.zero(n_cols)
    basis = np.zeros((len(free), n_cols), dtype=np.int64)
    for j, f in enumerate(free):
        basis[j, f] = 1
        for i, c in enumerate(pivots):
            basis[j, c] = (-r[i, f]) % p
    return Subspace.from_rows(basis, n_cols)


def intersect_dim(a: Subspace, b: Subspace) -> int:
    """dim(a ∩ b) = dim a + dim b - dim(a + b), by stacking and ranking."""
    if a.ambient_dim != b.ambient_dim:
        raise ValueError(
            f"ambient dimension mismatch: {a.ambient_dim} != {b.ambient_dim}"
        )
    if a.dim == 0 or b.dim == 0:
        return 0
    stacked = np.vstack([a.basis, b.basis])
    return a.dim + b.dim - rank(stacked, 3)


def is_orthogonal(design, s: Subspace) -> bool:
    """True iff every block of the design is orthogonal to every basis row.

    `design` is anything with `.v` and `.blocks` (an iterable of point
    triples); the block characteristic vectors are never materialized.
    """
    if s.ambient_dim != design.v:
        raise ValueError(
            f"ambient dimension {s.ambient_dim} does not match v={design.v}"
        )
    blocks = list(design.blocks)
    if not blocks or s.dim == 0:
        return True
    idx = np.asarray(blocks, dtype=np.int64)
    sums = s.basis[:, idx].sum(axis=2) % 3
    return not sums.any()


def permute_columns(m: np.ndarray, image) -> np.ndarray:
    """Move column i to position image[i] (the point-permutation action)."""
    a = as_matrix(m, 3)
    out = np.empty_like(a)
    out[:, np.asarray(image, dtype=np.int64)] = a
    return out


def permute_subspace(s: Subspace, image) -> Subspace:
    return Subspace.from_rows(permute_columns(s.basis, image), s.ambient_dim)
