"""Resolution search for triple systems via two exact-cover passes.

Pass (a) enumerates parallel classes: exact covers of the point set by
blocks.  Pass (b) covers the block set by those classes; any solution is
a resolution.  Both passes share one node budget, and pass (a) is capped
at a configurable class count, so a missing answer is reported as either
"exhausted: no resolution exists" or "budget exceeded: unknown".
"""

from __future__ import annotations

from dataclasses import dataclass

from .designs import BlockDesign, Resolution, StsInstance, verify_resolution
from .exact_cover import solve_exact_cover


@dataclass(frozen=True)
class SearchLimits:
    node_budget: int = 10**8
    max_classes: int = 10**6


@dataclass(frozen=True)
class SearchOutcome:
    resolution: Resolution | None
    budget_exceeded: bool
    classes_found: int
    nodes_used: int

    @property
    def exhausted(self) -> bool:
        """True when absence of a resolution was actually proven."""
        return self.resolution is None and not self.budget_exceeded


def enumerate_parallel_classes(
    d: BlockDesign, max_classes: int = 10**6, node_budget: int = 10**8
) -> tuple[tuple[tuple[int, ...], ...], bool, int]:
    """All block-index sets partitioning the points; (classes, complete, nodes)."""
    if d.v % 3 != 0:
        return ((), True, 0)
    res = solve_exact_cover(
        d.v, d.blocks, max_solutions=max_classes + 1, node_budget=node_budget
    )
    classes = res.solutions
    complete = res.complete
    if len(classes) > max_classes:
        classes = classes[:max_classes]
        complete = False
    return (classes, complete, res.nodes)


def search_resolution(d: BlockDesign, limits: SearchLimits | None = None) -> SearchOutcome:
    """Deterministic resolution search on any design with 3-element blocks."""
    limits = limits or SearchLimits()
    classes, complete_a, nodes_a = enumerate_parallel_classes(
        d, limits.max_classes, limits.node_budget
    )
    remaining = max(limits.node_budget - nodes_a, 0)
    res_b = solve_exact_cover(
        len(d.blocks), classes, max_solutions=1, node_budget=remaining
    )
    nodes = nodes_a + res_b.nodes
    if res_b.solutions:
        chosen = sorted(tuple(classes[i]) for i in res_b.solutions[0])
        resolution = Resolution(tuple(chosen))
        rep = verify_resolution(d, resolution)
        if not rep.ok:
            raise AssertionError(f"search produced an invalid resolution: {rep.violations[0]}")
        return SearchOutcome(resolution, False, len(classes), nodes)
    budget_exceeded = not (complete_a and res_b.complete)
    return SearchOutcome(None, budget_exceeded, len(classes), nodes)


def find_resolution(s: StsInstance, limits: SearchLimits | None = None) -> Resolution | None:
    """A resolution of the triple system, or None (budget or nonexistence).

    Use search_resolution for the full outcome; None here does not by
    itself distinguish a proven absence from an exhausted budget.
    """
    if s.v % 6 != 3:
        raise ValueError(f"resolvable triple systems need v = 3 (mod 6), got v={s.v}")
    return search_resolution(s.design, limits).resolution
