"""Triple systems, transversal designs, Latin squares, resolutions.

Blocks are sorted 3-tuples of points 0..v-1; block sets are sorted tuples
of blocks, so structural equality is plain tuple equality.  Constructors
of the checked wrapper types (StsInstance, TdInstance, LatinSquare)
validate their axioms; the verify_* functions return structured reports
for use on untrusted input.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import gf3

Block = tuple[int, int, int]


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    violations: tuple[str, ...] = ()

    @staticmethod
    def from_violations(violations: list[str]) -> "VerificationReport":
        return VerificationReport(not violations, tuple(violations))


@dataclass(frozen=True)
class BlockDesign:
    """A point set 0..v-1 plus a sorted, duplicate-free set of 3-blocks."""

    v: int
    blocks: tuple[Block, ...]

    def __post_init__(self):
        if self.v < 0:
            raise ValueError(f"negative point count v={self.v}")
        norm = []
        for b in self.blocks:
            t = tuple(sorted(int(p) for p in b))
            if len(t) != 3 or len(set(t)) != 3:
                raise ValueError(f"block {b!r} does not have 3 distinct points")
            if t[0] < 0 or t[2] >= self.v:
                raise ValueError(f"block {b!r} out of range for v={self.v}")
            norm.append(t)
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise ValueError(f"duplicate block {a!r}")
        object.__setattr__(self, "blocks", tuple(norm))

    def block_index(self) -> dict[Block, int]:
        return {b: i for i, b in enumerate(self.blocks)}


def incidence_matrix(d: BlockDesign) -> np.ndarray:
    """|blocks| x v characteristic 0/1 matrix."""
    m = np.zeros((len(d.blocks), d.v), dtype=np.int64)
    for i, b in enumerate(d.blocks):
        m[i, list(b)] = 1
    return m


def verify_sts(d: BlockDesign) -> VerificationReport:
    """Check the pair-coverage axiom: every pair in exactly one block."""
    cover: dict[tuple[int, int], int] = {}
    for b in d.blocks:
        for pair in combinations(b, 2):
            cover[pair] = cover.get(pair, 0) + 1
    violations = []
    for pair, count in sorted(cover.items()):
        if count != 1:
            violations.append(f"pair {pair} covered {count} times")
    for pair in combinations(range(d.v), 2):
        if pair not in cover:
            violations.append(f"pair {pair} covered 0 times")
    return VerificationReport.from_violations(violations)


@dataclass(frozen=True)
class StsInstance:
    """A verified Steiner triple system; construction fails on bad input."""

    design: BlockDesign

    def __post_init__(self):
        rep = verify_sts(self.design)
        if not rep.ok:
            raise ValueError(f"not an STS: {rep.violations[0]}")

    @property
    def v(self) -> int:
        return self.design.v

    @property
    def blocks(self) -> tuple[Block, ...]:
        return self.design.blocks


def verify_td(design: BlockDesign, groups: tuple[tuple[int, ...], ...]) -> VerificationReport:
    """Check the transversal-design axioms for 3 groups of equal size."""
    violations = []
    if len(groups) != 3:
        return VerificationReport(False, (f"expected 3 groups, got {len(groups)}",))
    w = len(groups[0])
    flat = [p for g in groups for p in g]
    if any(len(g) != w for g in groups):
        violations.append("groups have unequal sizes")
    if sorted(flat) != list(range(design.v)):
        violations.append("groups do not partition the point set")
    if violations:
        return VerificationReport.from_violations(violations)
    group_of = {p: gi for gi, g in enumerate(groups) for p in g}
    cover: dict[tuple[int, int], int] = {}
    for b in design.blocks:
        gs = sorted(group_of[p] for p in b)
        if gs != [0, 1, 2]:
            violations.append(f"block {b} does not meet every group exactly once")
            continue
        for pair in combinations(b, 2):
            cover[pair] = cover.get(pair, 0) + 1
    for pair, count in sorted(cover.items()):
        if count != 1:
            violations.append(f"cross pair {pair} covered {count} times")
    for gi, gj in combinations(range(3), 2):
        for p in groups[gi]:
            for q in groups[gj]:
                pair = (p, q) if p < q else (q, p)
                if pair not in cover:
                    violations.append(f"cross pair {pair} covered 0 times")
    if len(design.blocks) != w * w:
        violations.append(f"expected {w * w} blocks, got {len(design.blocks)}")
    return VerificationReport.from_violations(violations)


@dataclass(frozen=True)
class TdInstance:
    """A verified transversal design on 3 equal groups."""

    design: BlockDesign
    groups: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "groups", tuple(tuple(int(p) for p in g) for g in self.groups)
        )
        rep = verify_td(self.design, self.groups)
        if not rep.ok:
            raise ValueError(f"not a TD: {rep.violations[0]}")

    @property
    def v(self) -> int:
        return self.design.v

    @property
    def blocks(self) -> tuple[Block, ...]:
        return self.design.blocks

    @property
    def w(self) -> int:
        return len(self.groups[0])


@dataclass(frozen=True)
class Resolution:
    """Parallel classes as tuples of block indices into the owning design."""

    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "classes", tuple(tuple(int(i) for i in c) for c in self.classes)
        )

    @property
    def n_classes(self) -> int:
        return len(self.classes)


def verify_resolution(d: BlockDesign, r: Resolution) -> VerificationReport:
    """Check that each class partitions the points and the classes the blocks."""
    violations = []
    n = len(d.blocks)
    seen: dict[int, int] = {}
    for ci, cls in enumerate(r.classes):
        pts: list[int] = []
        for idx in cls:
            if not 0 <= idx < n:
                violations.append(f"class {ci}: block index {idx} out of range")
                continue
            if idx in seen:
                violations.append(
                    f"block index {idx} in classes {seen[idx]} and {ci}"
                )
            seen[idx] = ci
            pts.extend(d.blocks[idx])
        if sorted(pts) != list(range(d.v)):
            violations.append(f"class {ci} is not a partition of the points")
    missing = n - len(seen)
    if missing:
        violations.append(f"{missing} blocks not covered by any class")
    return VerificationReport.from_violations(violations)


def p_rank(d: BlockDesign, p: int) -> int:
    """Rank over GF(p) of the blocks-by-points incidence matrix."""
    if not d.blocks:
        return 0
    return gf3.rank(incidence_matrix(d), p)


def dual_space(d: BlockDesign) -> gf3.Subspace:
    """The GF(3) dual: all vectors orthogonal to every block."""
    if not d.blocks:
        return gf3.row_space(np.eye(d.v, dtype=np.int64))
    return gf3.null_space(incidence_matrix(d), 3)


@dataclass(frozen=True)
class LatinSquare:
    """A T x T array whose rows and columns are permutations of 0..T-1."""

    order: int
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "cells", tuple(tuple(int(x) for x in row) for row in self.cells)
        )
        full = list(range(self.order))
        if len(self.cells) != self.order:
            raise ValueError("wrong number of rows")
        for row in self.cells:
            if sorted(row) != full:
                raise ValueError(f"row {row} is not a permutation")
        for c in range(self.order):
            if sorted(row[c] for row in self.cells) != full:
                raise ValueError(f"column {c} is not a permutation")

    def __getitem__(self, rc: tuple[int, int]) -> int:
        return self.cells[rc[0]][rc[1]]


def are_orthogonal(a: LatinSquare, b: LatinSquare) -> bool:
    """True iff the T^2 superimposed cell pairs are all distinct."""
    if a.order != b.order:
        return False
    pairs = {
        (a.cells[r][c], b.cells[r][c])
        for r in range(a.order)
        for c in range(a.order)
    }
    return len(pairs) == a.order * a.order


def td_from_latin(sq: LatinSquare) -> TdInstance:
    """The standard correspondence: block {r, T+c, 2T+L(r,c)} per cell."""
    t = sq.order
    blocks = [(r, t + c, 2 * t + sq.cells[r][c]) for r in range(t) for c in range(t)]
    groups = (
        tuple(range(t)),
        tuple(range(t, 2 * t)),
        tuple(range(2 * t, 3 * t)),
    )
    return TdInstance(BlockDesign(3 * t, tuple(blocks)), groups)


def resolve_td(sq: LatinSquare, mate: LatinSquare) -> Resolution:
    """Resolution of td_from_latin(sq): class s holds the cells where mate = s."""
    if sq.order != mate.order:
        raise ValueError("order mismatch")
    if not are_orthogonal(sq, mate):
        raise ValueError("squares are not orthogonal")
    t = sq.order
    # Block of cell (r, c) sits at index r*t + c in the sorted block list.
    classes = [
        tuple(
            r * t + c
            for r in range(t)
            for c in range(t)
            if mate.cells[r][c] == s
        )
        for s in range(t)
    ]
    return Resolution(tuple(classes))


def permute_design(d: BlockDesign, image) -> BlockDesign:
    """Relabel points: point p becomes image[p]."""
    img = list(image)
    if sorted(img) != list(range(d.v)):
        raise ValueError("image is not a permutation of the points")
    return BlockDesign(d.v, tuple(tuple(sorted(img[p] for p in b)) for b in d.blocks))


def permute_sts(s: StsInstance, image) -> StsInstance:
    return StsInstance(permute_design(s.design, image))


def transport_resolution(d: BlockDesign, r: Resolution, image) -> Resolution:
    """Carry a resolution of d over to permute_design(d, image)."""
    img = list(image)
    new_design = permute_design(d, img)
    index = new_design.block_index()
    classes = [
        tuple(sorted(index[tuple(sorted(img[p] for p in d.blocks[i]))] for i in cls))
        for cls in r.classes
    ]
    return Resolution(tuple(classes))
