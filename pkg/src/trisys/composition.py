"""Grouped composition of triple systems.

A system on v = 3^k * T points orthogonal to the layout code G(v,k)
splits uniquely into 3^k sub-systems of order T (one per point group
S_i = {iT..(i+1)T-1}) plus one transversal design per zero-sum triple of
groups; compose/decompose realize the two directions of that bijection.
The (t)-split variant coarsens the grouping to 3^(k-t) super-groups and
composes from sub-systems that are themselves orthogonal to their local
layout code.  Resolution assembly merges ingredient resolutions into a
resolution of the composed system.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping, Sequence

from . import gf3
from .constructions import affine_geometry, small_sts
from .designs import (
    Block,
    BlockDesign,
    LatinSquare,
    Resolution,
    StsInstance,
    TdInstance,
    permute_sts,
    td_from_latin,
    verify_resolution,
)

Triple = tuple[int, int, int]


def ag_blocks(k: int) -> tuple[Triple, ...]:
    """Sorted zero-sum triples of ternary k-tuples (the group-level system)."""
    if k == 0:
        return ()
    return affine_geometry(k).sts.design.blocks


def canonical_td_groups(t: int) -> tuple[tuple[int, ...], ...]:
    return (tuple(range(t)), tuple(range(t, 2 * t)), tuple(range(2 * t, 3 * t)))


def _check_td(td: TdInstance, t: int, where: str) -> None:
    if td.w != t or td.groups != canonical_td_groups(t):
        raise ValueError(f"{where}: TD must have canonical groups of size {t}")


@dataclass(frozen=True)
class Decomposition:
    """Ingredients of a composed system: 3^k sub-systems plus one TD per
    group triple.  Sub-system i uses local points 0..T-1 and is embedded
    on S_i; the TD keyed by sorted triple (i1,i2,i3) uses canonical local
    groups mapped onto S_i1, S_i2, S_i3 in order."""

    k: int
    T: int
    sub_stss: tuple[StsInstance, ...]
    tds: Mapping[Triple, TdInstance]

    def __post_init__(self):
        if self.k < 0 or self.T < 1:
            raise ValueError(f"need k >= 0 and T >= 1, got k={self.k}, T={self.T}")
        object.__setattr__(self, "sub_stss", tuple(self.sub_stss))
        object.__setattr__(
            self, "tds", {tuple(sorted(key)): td for key, td in self.tds.items()}
        )
        m = 3**self.k
        if len(self.sub_stss) != m:
            raise ValueError(f"expected {m} sub-systems, got {len(self.sub_stss)}")
        for s in self.sub_stss:
            if s.v != self.T:
                raise ValueError(f"sub-system has order {s.v}, expected {self.T}")
        expected = set(ag_blocks(self.k))
        if set(self.tds) != expected:
            raise ValueError("TD keys must be exactly the zero-sum group triples")
        for key, td in self.tds.items():
            _check_td(td, self.T, f"triple {key}")

    @property
    def v(self) -> int:
        return 3**self.k * self.T


def _embed_sub(block: Block, i: int, t: int) -> Block:
    return (i * t + block[0], i * t + block[1], i * t + block[2])


def _embed_td(block: Block, triple: Triple, t: int) -> Block:
    return tuple(sorted(triple[p // t] * t + p % t for p in block))


def compose(d: Decomposition) -> StsInstance:
    """Union of embedded sub-system and TD blocks; a triple system on
    3^k * T points orthogonal to G(v, k)."""
    t = d.T
    blocks: list[Block] = []
    for i, sub in enumerate(d.sub_stss):
        blocks.extend(_embed_sub(b, i, t) for b in sub.blocks)
    for triple in sorted(d.tds):
        blocks.extend(_embed_td(b, triple, t) for b in d.tds[triple].blocks)
    sts = StsInstance(BlockDesign(d.v, tuple(blocks)))
    assert gf3.is_orthogonal(sts, gf3.row_space(gf3.generator_gvk(d.v, d.k)))
    return sts


def decompose(s: StsInstance, k: int) -> Decomposition:
    """Read the ingredients back off a system orthogonal to G(v,k) as laid out.

    Inverse of compose block for block.  Raises if the system is not
    orthogonal in the standard layout, or if some cross block touches a
    group triple that is not zero-sum; either way no decomposition exists.
    """
    v = s.v
    if k < 0 or v % 3**k != 0:
        raise ValueError(f"3^k must divide v, got v={v}, k={k}")
    if not gf3.is_orthogonal(s, gf3.row_space(gf3.generator_gvk(v, k))):
        raise ValueError(f"system is not orthogonal to G({v},{k}) as laid out")
    t = v // 3**k
    valid = set(ag_blocks(k))
    sub_blocks: list[list[Block]] = [[] for _ in range(3**k)]
    td_blocks: dict[Triple, list[Block]] = {triple: [] for triple in valid}
    for b in s.blocks:
        gs = sorted({p // t for p in b})
        if len(gs) == 1:
            sub_blocks[gs[0]].append(tuple(p - gs[0] * t for p in b))
        elif len(gs) == 3:
            triple = tuple(gs)
            if triple not in valid:
                raise ValueError(f"cross block {b} spans non-zero-sum groups {triple}")
            pos = {g: n for n, g in enumerate(triple)}
            td_blocks[triple].append(
                tuple(sorted(pos[p // t] * t + p % t for p in b))
            )
        else:
            raise ValueError(f"block {b} meets exactly two groups")
    subs = tuple(StsInstance(BlockDesign(t, tuple(bs))) for bs in sub_blocks)
    tds = {
        triple: TdInstance(BlockDesign(3 * t, tuple(bs)), canonical_td_groups(t))
        for triple, bs in td_blocks.items()
    }
    return Decomposition(k=k, T=t, sub_stss=subs, tds=tds)


def split_ag(k: int, t: int) -> tuple[list[list[Triple]], list[Triple]]:
    """Partition the group-level blocks by the coarse grouping
    L_j = {j*3^t .. (j+1)*3^t - 1}: per-L_j inner blocks, then the rest."""
    if not 0 <= t <= k:
        raise ValueError(f"need 0 <= t <= k, got t={t}, k={k}")
    size = 3**t
    inner: list[list[Triple]] = [[] for _ in range(3 ** (k - t))]
    outer: list[Triple] = []
    for blk in ag_blocks(k):
        js = {i // size for i in blk}
        if len(js) == 1:
            inner[js.pop()].append(blk)
        else:
            outer.append(blk)
    return inner, outer


@dataclass(frozen=True)
class SplitDecomposition:
    """Coarse-grouped ingredients: 3^(k-t) sub-systems of order 3^t * T,
    each orthogonal to its local layout code G(3^t*T, t), plus one TD per
    cross-group zero-sum triple."""

    k: int
    t: int
    T: int
    sub_systems: tuple[StsInstance, ...]
    tds: Mapping[Triple, TdInstance]

    def __post_init__(self):
        if not 0 <= self.t <= self.k or self.T < 1:
            raise ValueError(
                f"need 0 <= t <= k and T >= 1, got k={self.k}, t={self.t}, T={self.T}"
            )
        object.__setattr__(self, "sub_systems", tuple(self.sub_systems))
        object.__setattr__(
            self, "tds", {tuple(sorted(key)): td for key, td in self.tds.items()}
        )
        n = 3 ** (self.k - self.t)
        m = 3**self.t * self.T
        if len(self.sub_systems) != n:
            raise ValueError(f"expected {n} sub-systems, got {len(self.sub_systems)}")
        local = gf3.row_space(gf3.generator_gvk(m, self.t))
        for j, sub in enumerate(self.sub_systems):
            if sub.v != m:
                raise ValueError(f"sub-system {j} has order {sub.v}, expected {m}")
            if not gf3.is_orthogonal(sub, local):
                raise ValueError(
                    f"sub-system {j} is not orthogonal to its local G({m},{self.t})"
                )
        _, outer = split_ag(self.k, self.t)
        if set(self.tds) != set(outer):
            raise ValueError("TD keys must be exactly the cross-group triples")
        for key, td in self.tds.items():
            _check_td(td, self.T, f"triple {key}")

    @property
    def v(self) -> int:
        return 3**self.k * self.T


def compose_split(sd: SplitDecomposition) -> StsInstance:
    """Union per the coarse grouping; reduces to compose when t = 0."""
    t = sd.T
    m = 3**sd.t * t
    blocks: list[Block] = []
    for j, sub in enumerate(sd.sub_systems):
        blocks.extend(tuple(p + j * m for p in b) for b in sub.blocks)
    for triple in sorted(sd.tds):
        blocks.extend(_embed_td(b, triple, t) for b in sd.tds[triple].blocks)
    sts = StsInstance(BlockDesign(sd.v, tuple(blocks)))
    assert gf3.is_orthogonal(sts, gf3.row_space(gf3.generator_gvk(sd.v, sd.k)))
    return sts


def split_standard_resolution(k: int) -> tuple[BlockDesign, Resolution]:
    """The cross-group blocks for t = 1 with the translation resolution
    minus its one inner class (the class holding block (0,1,2))."""
    inner, outer = split_ag(k, 1)
    inner_set = {b for group in inner for b in group}
    ag = affine_geometry(k)
    all_blocks = ag.sts.design.blocks
    deleted = None
    for cls in ag.standard_resolution.classes:
        if all_blocks.index((0, 1, 2)) in cls:
            deleted = cls
            break
    assert deleted is not None and {all_blocks[i] for i in deleted} == inner_set
    remainder = BlockDesign(3**k, tuple(outer))
    index = remainder.block_index()
    classes = tuple(
        tuple(index[all_blocks[i]] for i in cls)
        for cls in ag.standard_resolution.classes
        if cls is not deleted
    )
    return remainder, Resolution(classes)


def _outer_design(dec) -> BlockDesign:
    if isinstance(dec, Decomposition):
        return BlockDesign(3**dec.k, ag_blocks(dec.k))
    return BlockDesign(3**dec.k, tuple(split_ag(dec.k, dec.t)[1]))


def compose_resolution(
    dec: Decomposition | SplitDecomposition,
    sub_resolutions: Sequence[Resolution],
    td_resolutions: Mapping[Triple, Resolution],
    outer_resolution: Resolution,
) -> Resolution:
    """Merge ingredient resolutions into one for the composed system.

    Produces (v-1)/2 classes: each sub-system class index contributes one
    merged class, and each (outer class, TD class index) pair contributes
    one class merged across that outer class's transversal designs.  The
    outer resolution indexes the group-level block list (all zero-sum
    triples for a plain decomposition, the cross-group ones for a split).
    """
    plain = isinstance(dec, Decomposition)
    subs = dec.sub_stss if plain else dec.sub_systems
    sub_order = dec.T if plain else 3**dec.t * dec.T
    if len(sub_resolutions) != len(subs):
        raise ValueError("one resolution per sub-system is required")
    for s, r in zip(subs, sub_resolutions):
        rep = verify_resolution(s.design, r)
        if not rep.ok:
            raise ValueError(f"invalid sub-system resolution: {rep.violations[0]}")
    td_resolutions = {tuple(sorted(key)): r for key, r in td_resolutions.items()}
    if set(td_resolutions) != set(dec.tds):
        raise ValueError("need exactly one resolution per transversal design")
    for key, r in td_resolutions.items():
        rep = verify_resolution(dec.tds[key].design, r)
        if not rep.ok:
            raise ValueError(f"invalid TD resolution at {key}: {rep.violations[0]}")
    outer = _outer_design(dec)
    rep = verify_resolution(outer, outer_resolution)
    if not rep.ok:
        raise ValueError(f"invalid outer resolution: {rep.violations[0]}")

    composed = compose(dec) if plain else compose_split(dec)
    index = composed.design.block_index()
    t = dec.T
    classes: list[tuple[int, ...]] = []
    for j in range((sub_order - 1) // 2):
        merged = []
        for i, (sub, res) in enumerate(zip(subs, sub_resolutions)):
            for bi in res.classes[j]:
                b = sub.blocks[bi]
                emb = _embed_sub(b, i, t) if plain else tuple(p + i * sub_order for p in b)
                merged.append(index[emb])
        classes.append(tuple(sorted(merged)))
    for outer_cls in outer_resolution.classes:
        triples = [outer.blocks[i] for i in outer_cls]
        for j in range(t):
            merged = []
            for triple in triples:
                td = dec.tds[triple]
                for bi in td_resolutions[triple].classes[j]:
                    merged.append(index[_embed_td(td.blocks[bi], triple, t)])
            classes.append(tuple(sorted(merged)))
    resolution = Resolution(tuple(classes))
    rep = verify_resolution(composed.design, resolution)
    if not rep.ok:
        raise AssertionError(f"assembled resolution invalid: {rep.violations[0]}")
    return resolution


def random_latin(t: int, rng: random.Random) -> LatinSquare:
    """A random relabeling (row/column/symbol) of the cyclic square."""
    rows = rng.sample(range(t), t)
    cols = rng.sample(range(t), t)
    syms = rng.sample(range(t), t)
    return LatinSquare(
        t, tuple(tuple(syms[(rows[r] + cols[c]) % t] for c in range(t)) for r in range(t))
    )


def random_decomposition(k: int, t: int, rng: random.Random) -> Decomposition:
    """Seeded ingredient selection: relabeled stock systems and random
    Latin-square transversal designs."""
    base = small_sts(t)
    subs = tuple(
        permute_sts(base, rng.sample(range(t), t)) for _ in range(3**k)
    )
    tds = {
        triple: td_from_latin(random_latin(t, rng)) for triple in ag_blocks(k)
    }
    return Decomposition(k=k, T=t, sub_stss=subs, tds=tds)
