"""Exact cover by Algorithm X with dancing links.

Given columns 0..n-1 and rows (each a set of column indices), find row
subsets covering every column exactly once.  Deterministic: the column
with the fewest candidates is chosen (leftmost on ties) and rows are
tried in insertion order, so the solution sequence is a pure function
of the input ordering.

A node budget caps the search; `complete` in the result tells whether
the space was exhausted, so "no solution found" and "ran out of budget"
stay distinguishable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class _Node:
    __slots__ = ("left", "right", "up", "down", "column", "row_id")

    def __init__(self):
        self.left = self.right = self.up = self.down = self
        self.column: "_Column" = None  # type: ignore[assignment]
        self.row_id = -1


class _Column(_Node):
    __slots__ = ("size", "name")

    def __init__(self, name: int):
        super().__init__()
        self.column = self
        self.size = 0
        self.name = name


@dataclass(frozen=True)
class CoverResult:
    solutions: tuple[tuple[int, ...], ...]
    complete: bool
    nodes: int


class ExactCover:
    def __init__(self, n_cols: int):
        self.header = _Column(-1)
        self.columns = [_Column(i) for i in range(n_cols)]
        prev: _Node = self.header
        for col in self.columns:
            col.left = prev
            col.right = self.header
            prev.right = col
            self.header.left = col
            prev = col
        self.n_rows = 0

    def add_row(self, cols: Iterable[int]) -> int:
        row_id = self.n_rows
        self.n_rows += 1
        first: _Node | None = None
        for c in sorted(set(cols)):
            column = self.columns[c]
            node = _Node()
            node.column = column
            node.row_id = row_id
            node.down = column
            node.up = column.up
            column.up.down = node
            column.up = node
            column.size += 1
            if first is None:
                first = node
            else:
                node.left = first.left
                node.right = first
                first.left.right = node
                first.left = node
        return row_id

    def _cover(self, column: _Column) -> None:
        column.right.left = column.left
        column.left.right = column.right
        row = column.down
        while row is not column:
            node = row.right
            while node is not row:
                node.down.up = node.up
                node.up.down = node.down
                node.column.size -= 1
                node = node.right
            row = row.down

    def _uncover(self, column: _Column) -> None:
        row = column.up
        while row is not column:
            node = row.left
            while node is not row:
                node.column.size += 1
                node.down.up = node
                node.up.down = node
                node = node.left
            row = row.up
        column.right.left = column
        column.left.right = column

    def solve(self, max_solutions: int = 1, node_budget: int = 10**8) -> CoverResult:
        solutions: list[tuple[int, ...]] = []
        partial: list[int] = []
        nodes = 0
        stopped = False

        def search() -> bool:
            """False aborts the whole search (budget hit or enough solutions)."""
            nonlocal nodes, stopped
            if self.header.right is self.header:
                solutions.append(tuple(sorted(partial)))
                if len(solutions) >= max_solutions:
                    stopped = True
                    return False
                return True
            # Smallest column first; leftmost wins ties.
            col = None
            c = self.header.right
            while c is not self.header:
                if col is None or c.size < col.size:
                    col = c
                c = c.right
            if col.size == 0:
                return True
            self._cover(col)
            aborted = False
            row = col.down
            while row is not col:
                nodes += 1
                if nodes > node_budget:
                    stopped = True
                    aborted = True
                    break
                partial.append(row.row_id)
                node = row.right
                while node is not row:
                    self._cover(node.column)
                    node = node.right
                ok = search()
                node = row.left
                while node is not row:
                    self._uncover(node.column)
                    node = node.left
                partial.pop()
                if not ok:
                    aborted = True
                    break
                row = row.down
            self._uncover(col)
            return not aborted

        search()
        return CoverResult(tuple(solutions), not stopped, nodes)


def solve_exact_cover(
    n_cols: int,
    rows: Sequence[Iterable[int]],
    max_solutions: int = 1,
    node_budget: int = 10**8,
) -> CoverResult:
    """One-shot helper: build the matrix from `rows` and run the search."""
    ec = ExactCover(n_cols)
    for r in rows:
        ec.add_row(r)
    return ec.solve(max_solutions=max_solutions, node_budget=node_budget)
