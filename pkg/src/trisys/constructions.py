"""Generators for ingredient systems.

Affine triple systems with their translation resolutions, Bose/Skolem
small systems, Latin squares with orthogonal mates, and a stock
resolvable system of order 15.  Constants are re-verified at build time;
the checked constructors are the oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .designs import (
    BlockDesign,
    LatinSquare,
    Resolution,
    StsInstance,
    are_orthogonal,
    resolve_td,
    td_from_latin,
    verify_resolution,
)
from .resolution import SearchLimits, find_resolution


def ternary_tuples(k: int) -> list[tuple[int, ...]]:
    """All length-k tuples over {0,1,2} in lexicographic order."""
    return [()] if k == 0 else list(product((0, 1, 2), repeat=k))


def tuple_index(t: tuple[int, ...]) -> int:
    i = 0
    for d in t:
        i = 3 * i + d
    return i


@dataclass(frozen=True)
class AffineGeometry:
    """The zero-sum-triple system on 3^k points plus its translation resolution."""

    k: int
    sts: StsInstance
    standard_resolution: Resolution


def affine_geometry(k: int) -> AffineGeometry:
    """Point i carries the i-th ternary k-tuple; blocks are zero-sum triples.

    Two blocks share a parallel class exactly when one is a translate of
    the other, i.e. when their point tuples differ by a common shift;
    classes are keyed by line direction.
    """
    if k < 1:
        raise ValueError("k must be >= 1 (k = 0 has no blocks)")
    n = 3**k
    tuples = ternary_tuples(k)
    blocks = []
    for a in range(n):
        ta = tuples[a]
        for b in range(a + 1, n):
            tb = tuples[b]
            c = tuple_index(tuple((-x - y) % 3 for x, y in zip(ta, tb)))
            if c > b:
                blocks.append((a, b, c))
    design = BlockDesign(n, tuple(blocks))
    sts = StsInstance(design)

    def direction(block):
        d = tuple((y - x) % 3 for x, y in zip(tuples[block[0]], tuples[block[1]]))
        first = next(x for x in d if x)
        return d if first == 1 else tuple((2 * x) % 3 for x in d)

    by_dir: dict[tuple[int, ...], list[int]] = {}
    for i, blk in enumerate(design.blocks):
        by_dir.setdefault(direction(blk), []).append(i)
    classes = tuple(tuple(by_dir[d]) for d in sorted(by_dir))
    resolution = Resolution(classes)
    rep = verify_resolution(design, resolution)
    if not rep.ok:
        raise AssertionError(f"translation resolution invalid: {rep.violations[0]}")
    return AffineGeometry(k, sts, resolution)


def latin_with_mate(t: int) -> tuple[LatinSquare, LatinSquare]:
    """The pair L(r,c) = r+c and mate(r,c) = r+2c mod t; orthogonal for odd t."""
    if t < 1 or t % 2 == 0:
        raise ValueError(f"order must be odd and positive, got {t}")
    main = LatinSquare(t, tuple(tuple((r + c) % t for c in range(t)) for r in range(t)))
    mate = LatinSquare(t, tuple(tuple((r + 2 * c) % t for c in range(t)) for r in range(t)))
    if not are_orthogonal(main, mate):
        raise AssertionError("linear pair failed the orthogonality check")
    return main, mate


def _bose(n: int) -> StsInstance:
    """Order 3n for odd n: points Z_n x {0,1,2}, label (x, j) -> j*n + x."""
    half = (n + 1) // 2  # inverse of 2 mod n
    blocks = [(x, n + x, 2 * n + x) for x in range(n)]
    for j in range(3):
        for x in range(n):
            for y in range(x + 1, n):
                z = ((x + y) * half) % n
                blocks.append(
                    tuple(sorted((j * n + x, j * n + y, ((j + 1) % 3) * n + z)))
                )
    return StsInstance(BlockDesign(3 * n, tuple(blocks)))


def _skolem(t: int) -> StsInstance:
    """Order 6t+1: points (Z_2t x {0,1,2}) + one extra, label (x, j) -> j*2t + x."""
    n = 2 * t
    inf = 3 * n

    def q(x, y):  # commutative half-idempotent quasigroup on Z_2t
        s = (x + y) % n
        return s // 2 if s % 2 == 0 else t + (s - 1) // 2

    blocks = [(x, n + x, 2 * n + x) for x in range(t)]
    for j in range(3):
        for x in range(t):
            blocks.append(tuple(sorted((inf, j * n + t + x, ((j + 1) % 3) * n + x))))
        for x in range(n):
            for y in range(x + 1, n):
                blocks.append(
                    tuple(sorted((j * n + x, j * n + y, ((j + 1) % 3) * n + q(x, y))))
                )
    return StsInstance(BlockDesign(6 * t + 1, tuple(blocks)))


def small_sts(t: int) -> StsInstance:
    """A concrete triple system of any admissible order t = 1, 3 (mod 6)."""
    if t < 1 or t % 6 not in (1, 3):
        raise ValueError(f"no triple system of order {t}")
    if t == 1:
        return StsInstance(BlockDesign(1, ()))
    if t % 6 == 3:
        return _bose(t // 3)
    return _skolem(t // 6)


# Resolution of the order-15 system below, found once by search_resolution
# and frozen; re-verified on every call.
_KTS15_CLASSES = (
    (0, 19, 25, 30, 32),
    (1, 9, 18, 28, 34),
    (2, 10, 17, 21, 23),
    (3, 11, 14, 22, 33),
    (4, 12, 13, 24, 27),
    (5, 7, 16, 26, 31),
    (6, 8, 15, 20, 29),
)


def kts15() -> tuple[StsInstance, Resolution]:
    """A resolvable order-15 system: XOR-zero triples of the 4-bit nonzero codes.

    The constant class list is untrusted input here: both the triple-system
    axioms and the resolution are re-checked before returning.
    """
    blocks = []
    for a in range(1, 16):
        for b in range(a + 1, 16):
            c = a ^ b
            if c > b:
                blocks.append((a - 1, b - 1, c - 1))
    sts = StsInstance(BlockDesign(15, tuple(blocks)))
    resolution = Resolution(_KTS15_CLASSES)
    rep = verify_resolution(sts.design, resolution)
    if not rep.ok:
        raise AssertionError(f"stored order-15 resolution invalid: {rep.violations[0]}")
    return sts, resolution


def resolvable_sts(
    t: int, limits: SearchLimits | None = None
) -> tuple[StsInstance, Resolution] | None:
    """A triple system of order t = 3 (mod 6) together with a resolution.

    Powers of three come from the affine systems, 15 from stock, orders
    9 (mod 18) from the grouped composition over order t/3, and anything
    else from budgeted search on the Bose system (None = budget ran out,
    not a nonexistence proof).
    """
    if t % 6 != 3:
        raise ValueError(f"resolvable triple systems need order 3 (mod 6), got {t}")
    m, k = t, 0
    while m % 3 == 0:
        m //= 3
        k += 1
    if m == 1:
        ag = affine_geometry(k)
        return ag.sts, ag.standard_resolution
    if t == 15:
        return kts15()
    if (t // 3) % 6 == 3:
        return _resolvable_by_composition(t, limits)
    sts = small_sts(t)
    found = find_resolution(sts, limits)
    return None if found is None else (sts, found)


def _resolvable_by_composition(t, limits):
    from .composition import Decomposition, compose, compose_resolution

    sub = resolvable_sts(t // 3, limits)
    if sub is None:
        return None
    sub_sts, sub_res = sub
    main, mate = latin_with_mate(t // 3)
    td = td_from_latin(main)
    td_res = resolve_td(main, mate)
    ag1 = affine_geometry(1)
    dec = Decomposition(k=1, T=t // 3, sub_stss=(sub_sts,) * 3, tds={(0, 1, 2): td})
    res = compose_resolution(
        dec,
        sub_resolutions=(sub_res,) * 3,
        td_resolutions={(0, 1, 2): td_res},
        outer_resolution=ag1.standard_resolution,
    )
    return compose(dec), res
